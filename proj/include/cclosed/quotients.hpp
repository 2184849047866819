#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  //! A subset I with IX and XI contained in I. May be empty.
  struct Ideal {
    Subset carrier;
  };

  //! An equivalence relation on [0, n) stored as class indices. Classes are
  //! numbered in order of their least element, so two equal partitions have
  //! identical representations.
  class Congruence {
   public:
    //! The identity partition.
    explicit Congruence(std::size_t n);

    //! Any labelling of the classes; it is renumbered canonically.
    static Congruence from_labels(std::vector<std::size_t> const& labels);

    //! Throws ArgumentError unless the blocks partition [0, n).
    static Congruence
    from_blocks(std::size_t n, std::vector<std::vector<element_type>> const& blocks);

    std::size_t universe() const noexcept {
      return _class_of.size();
    }

    std::size_t class_count() const noexcept {
      return _count;
    }

    std::size_t class_of(element_type x) const {
      return _class_of[x];
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return _class_of;
    }

    std::vector<std::vector<element_type>> blocks() const;

    bool operator==(Congruence const&) const = default;

   private:
    Congruence() = default;

    std::vector<std::size_t> _class_of;
    std::size_t              _count = 0;
  };

  struct Quotient {
    CayleyTable table;
    //! original element -> element of the quotient
    std::vector<element_type> projection;
  };

  bool is_ideal(CayleyTable const& table, Subset const& a);

  //! A pair (x, a) with xa or ax outside \p a, if any.
  std::optional<std::pair<element_type, element_type>>
  ideal_violation(CayleyTable const& table, Subset const& a);

  //! The least ideal containing \p a.
  Ideal generated_ideal(CayleyTable const& table, Subset const& a);

  //! X/I. The collapsed ideal becomes element 0 and the other elements keep
  //! their relative order. The empty ideal gives back the table unchanged.
  //! Throws PreconditionError with a violating pair when \p ideal is not an
  //! ideal.
  Quotient rees_quotient(CayleyTable const& table, Subset const& ideal);

  //! The partition {I} plus singletons.
  Congruence rees_congruence(CayleyTable const& table, Subset const& ideal);

  //! The least congruence containing every pair.
  Congruence congruence_closure(
      CayleyTable const&                                      table,
      std::vector<std::pair<element_type, element_type>> const& pairs);

  //! (x, y, a) with x ~ y but ax !~ ay (a applied on the left) or
  //! xa !~ ya (on the right).
  struct CongruenceViolation {
    element_type x;
    element_type y;
    element_type a;
    bool         left;
  };

  std::optional<CongruenceViolation> congruence_violation(CayleyTable const& table,
                                                          Congruence const&  c);

  //! X/~ with classes as elements (class i is element i). Throws
  //! PreconditionError carrying the violating triple if \p c is not a
  //! congruence.
  Quotient quotient_by_congruence(CayleyTable const& table, Congruence const& c);

  //! The least idempotent s (in the natural order) of the preimage of the
  //! idempotent \p e_class of X/~. The image of H_s is then the H-class of
  //! e_class. The table must be commutative.
  element_type lift_idempotent(CayleyTable const& table,
                               Congruence const&  c,
                               element_type       e_class);

  //! Every congruence of a table of order at most 6, in restricted-growth
  //! order of the class labels.
  std::vector<Congruence> all_congruences(CayleyTable const& table);

}  // namespace cclosed
