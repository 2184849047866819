#pragma once

// Element-level computations on finite semigroups given by Cayley tables.
// Every function here is pure; apart from validate() they assume the table
// is associative.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  struct ValidationReport {
    bool associative;
    bool commutative;
    //! Lexicographically least (x, y, z) with (xy)z != x(yz).
    std::optional<std::array<element_type, 3>> associativity_witness;
    //! Lexicographically least (x, y) with xy != yx.
    std::optional<std::array<element_type, 2>> commutativity_witness;
  };

  ValidationReport validate(CayleyTable const& table);

  bool is_idempotent(CayleyTable const& table, element_type x);

  //! E(X) = {x : xx = x}.
  Subset idempotents(CayleyTable const& table);

  //! e <= f iff ef = e. Throws PreconditionError unless both are idempotent.
  bool natural_le(CayleyTable const& table, element_type e, element_type f);

  struct ChainResult {
    std::size_t length;
    Subset      witness;
  };

  //! Size of a largest chain, i.e. a set C with xy in {x, y} for all x, y in
  //! C (x = y included, so every member is idempotent). The witness is the
  //! lexicographically least chain of that size.
  ChainResult max_chain_length(CayleyTable const& table);

  //! Z(X) = {z : xz = zx for all x}.
  Subset center(CayleyTable const& table);

  //! {a} union aX, the principal right ideal of a in X^1.
  Subset principal_right_ideal(CayleyTable const& table, element_type a);
  //! {a} union Xa.
  Subset principal_left_ideal(CayleyTable const& table, element_type a);

  //! Green's H-class of a. For an idempotent e this is the maximal subgroup
  //! with identity e.
  Subset h_class(CayleyTable const& table, element_type a);

  //! H(X): the union of the maximal subgroups.
  Subset clifford_part(CayleyTable const& table);

  struct MonogenicData {
    //! least i >= 1 such that x^i reappears later in the sequence of powers
    std::size_t  index;
    std::size_t  period;
    //! the unique idempotent among x, x^2, x^3, ...
    element_type pi;
  };

  MonogenicData monogenic_data(CayleyTable const& table, element_type x);

  //! x |-> the idempotent power of x. Defined when every idempotent is
  //! central, in which case it is a homomorphism onto E(X). Throws
  //! PreconditionError naming the first non-central idempotent otherwise.
  std::vector<element_type> pi_map(CayleyTable const& table);

  //! {x : x^n in A for some n >= 1}
  Subset root_inf(CayleyTable const& table, Subset const& a);

  //! Z_k = {z in Z(X) : z^k in H_e} for k = 1..n_max. Each set is contained
  //! in the next.
  std::vector<Subset>
  z_sets(CayleyTable const& table, element_type e, std::size_t n_max);

  //! Least n >= 1 with x^n = e for all x in H_e.
  std::size_t group_exponent(CayleyTable const& table, element_type e);

  //! The least common multiple of group_exponent over all idempotents; this
  //! is the exponent shared by every subgroup of the table.
  std::size_t subgroup_exponent(CayleyTable const& table);

  namespace detail {
    //! Largest clique of the graph on \p candidates (given in increasing
    //! order) whose edges are \p adjacent; among cliques of maximum size the
    //! lexicographically least is returned. With a \p cap the search stops
    //! at cliques of that size.
    template <typename Adjacent>
    std::vector<element_type>
    max_clique(std::vector<element_type> const& candidates,
               Adjacent&&                       adjacent,
               std::size_t                      cap = static_cast<std::size_t>(-1));
  }  // namespace detail

}  // namespace cclosed

#include "cclosed/semigroup.tpp"
