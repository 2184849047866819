#pragma once

// Symbolic descriptions of (possibly infinite) commutative semigroups and the
// compositional evaluation of the structural predicates that decide
// closedness.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  //! A positive count or omega (countably many, as a direct sum).
  class Multiplicity {
   public:
    //! Throws ArgumentError on 0.
    explicit Multiplicity(std::uint64_t count);

    static Multiplicity omega() {
      Multiplicity m(1);
      m._count = 0;
      return m;
    }

    bool is_omega() const noexcept {
      return _count == 0;
    }

    //! Meaningless for omega.
    std::uint64_t count() const noexcept {
      return _count;
    }

    bool operator==(Multiplicity const&) const = default;

   private:
    std::uint64_t _count;  // 0 encodes omega
  };

  struct GroupFactor {
    enum class Kind { cyclic, prufer, integers, cyclic_tower };

    Kind kind;
    //! order for cyclic, the prime for prufer and cyclic_tower, unused for
    //! integers
    std::uint64_t parameter    = 0;
    Multiplicity  multiplicity = Multiplicity(1);

    static GroupFactor cyclic(std::uint64_t order, Multiplicity m = Multiplicity(1));
    static GroupFactor prufer(std::uint64_t prime, Multiplicity m = Multiplicity(1));
    static GroupFactor integers(Multiplicity m = Multiplicity(1));
    static GroupFactor cyclic_tower(std::uint64_t prime,
                                    Multiplicity  m = Multiplicity(1));

    bool operator==(GroupFactor const&) const = default;
  };

  //! The direct sum of the factors.
  struct GroupSpec {
    std::vector<GroupFactor> factors;
  };

  struct FinitePoset {
    //! meet table
    CayleyTable table;
    std::string source;
  };
  //! (N, min)
  struct OmegaChain {};
  //! a bottom element below infinitely many pairwise incomparable elements
  struct OmegaAntichainZero {};

  using SemilatticeSpec = std::variant<FinitePoset, OmegaChain, OmegaAntichainZero>;

  class Descriptor;
  using DescriptorPtr = std::shared_ptr<Descriptor const>;

  struct FiniteTableNode {
    CayleyTable table;
    std::string source;
  };
  struct ProductNode {
    DescriptorPtr left;
    DescriptorPtr right;
  };
  struct AdjoinZeroNode {
    DescriptorPtr inner;
  };
  struct AdjoinIdentityNode {
    DescriptorPtr inner;
  };
  //! Countably infinite carrier; xy = 1 for distinct x, y outside {0, 1},
  //! otherwise 0.
  struct TaimanovNode {};
  //! Countably infinite carrier, every product is 0.
  struct NullNode {};

  //! An immutable expression tree. Every descriptor denotes a commutative
  //! semigroup; the factory functions reject anything else.
  class Descriptor {
   public:
    using Node = std::variant<FiniteTableNode,
                              GroupSpec,
                              SemilatticeSpec,
                              ProductNode,
                              AdjoinZeroNode,
                              AdjoinIdentityNode,
                              TaimanovNode,
                              NullNode>;

    //! Throws PreconditionError unless the table is associative and
    //! commutative.
    static Descriptor finite_table(CayleyTable table, std::string source = "");
    //! Throws ArgumentError on an empty factor list, an order of 0 or a
    //! non-prime parameter.
    static Descriptor group(GroupSpec spec);
    //! Throws PreconditionError when a finite poset table is not a
    //! semilattice.
    static Descriptor semilattice(SemilatticeSpec spec);
    static Descriptor product(Descriptor left, Descriptor right);
    static Descriptor adjoin_zero(Descriptor inner);
    static Descriptor adjoin_identity(Descriptor inner);
    static Descriptor taimanov();
    static Descriptor null();

    Node const& node() const noexcept {
      return _node;
    }

   private:
    explicit Descriptor(Node node) : _node(std::move(node)) {}

    Node _node;
  };

  bool is_prime(std::uint64_t p);

  struct Cardinality {
    //! nullopt for countably infinite
    std::optional<std::uint64_t> finite;

    bool is_finite() const noexcept {
      return finite.has_value();
    }
    bool operator==(Cardinality const&) const = default;
  };

  //! Throws SizeLimitError if a finite cardinality does not fit in 64 bits.
  Cardinality cardinality(Descriptor const& d);

  struct Predicate {
    bool        value;
    //! why the value holds; for a failure this names the offending part
    std::string witness;
  };

  struct PredicateProfile {
    Cardinality cardinality;
    Predicate   periodic;
    Predicate   chain_finite;
    Predicate   subgroups_bounded;
    //! common exponent of all subgroups, when bounded
    std::optional<std::uint64_t> exponent;
    Predicate                    almost_clifford;
    //! H(X) = X
    bool      clifford;
    //! some infinite A has AA a singleton
    Predicate has_singleton_square;
  };

  PredicateProfile evaluate(Descriptor const& d);

  //! A finite commutative table of at most \p size_budget elements that
  //! embeds in the semigroup \p d denotes:
  //!   group         direct product of cyclic subgroups chosen greedily
  //!                 factor by factor (Z_{p^k} inside a Prufer group,
  //!                 initial summands of a tower, the trivial group for Z);
  //!   chain-omega   the chain 0 < 1 < ... < b-1;
  //!   antichain     0 below 1..b-1;
  //!   taimanov/null the same formula on {0..b-1};
  //!   table/poset   greedy subsemigroup built from the smallest elements;
  //!   product       product of truncations, budget split between factors;
  //!   adjoin-*      truncation of the inner descriptor plus the new element.
  //! Throws ArgumentError when \p size_budget is 0.
  CayleyTable truncate(Descriptor const& d, std::size_t size_budget);

  //! Expression text, see expr.hpp. Multiplicity 1 is omitted.
  std::string render(Descriptor const& d);
  std::string render(GroupFactor const& f);

}  // namespace cclosed
