#pragma once

// The power semigroup of nonempty subsets of a finite semigroup X. On a
// finite set every filter is generated by a single nonempty subset, so this
// is the semigroup of filters on X with the product generated by setwise
// products. Singletons form a copy of X.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  //! Bitmask of a subset of a base with at most 32 elements.
  using subset_mask = std::uint32_t;

  //! Largest base for which power_semigroup() materializes the product table
  //! ((2^12 - 1)^2 entries).
  inline constexpr std::size_t power_semigroup_max_base = 12;

  class PowerSemigroup {
   public:
    PowerSemigroup(CayleyTable base, CayleyTable table)
        : _base(std::move(base)), _table(std::move(table)) {}

    CayleyTable const& base() const noexcept {
      return _base;
    }

    //! Element i is the subset with bitmask i + 1.
    CayleyTable const& table() const noexcept {
      return _table;
    }

    static element_type index_of(subset_mask mask) {
      return mask - 1;
    }
    static subset_mask mask_of(element_type index) {
      return index + 1;
    }
    static element_type singleton(element_type x) {
      return index_of(subset_mask(1) << x);
    }

    Subset subset(element_type index) const;

   private:
    CayleyTable _base;
    CayleyTable _table;
  };

  subset_mask to_mask(Subset const& s);
  Subset      from_mask(std::size_t n, subset_mask mask);

  //! Throws SizeLimitError if the base has more than
  //! power_semigroup_max_base elements.
  PowerSemigroup power_semigroup(CayleyTable const& table);

  //! UV = {uv : u in U, v in V}. Throws ArgumentError on an empty operand.
  Subset subset_product(CayleyTable const& table, Subset const& u, Subset const& v);

  //! <U>: the filters containing U, i.e. the nonempty subsets of U, in
  //! increasing bitmask order.
  std::vector<Subset> basic_open(CayleyTable const& table, Subset const& u);

  namespace kernels {
    //! Product table over nonempty masks: entry [(U - 1) * (2^n - 1) + V - 1]
    //! is the mask of UV. Direct double loop over members.
    std::vector<subset_mask> power_table_serial(CayleyTable const& table);

    //! Same result; built column by column from UV = (U - u)V | uV with
    //! the columns distributed over OpenMP threads.
    std::vector<subset_mask> power_table_parallel(CayleyTable const& table);
  }  // namespace kernels

}  // namespace cclosed
