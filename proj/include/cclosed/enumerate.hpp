#pragma once

#include <cstddef>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  inline constexpr std::size_t max_enumeration_order = 5;

  enum class UpTo { labelled, isomorphism };

  //! Every commutative semigroup table on {0..n-1} exactly once, in
  //! lexicographic order of the row-major entries. With UpTo::isomorphism
  //! only the lexicographically least table of each isomorphism class is
  //! kept. Work is split by the first cells of row 0 and merged in order,
  //! so the output does not depend on the thread count. Throws
  //! ArgumentError unless 1 <= n <= 5.
  std::vector<CayleyTable> enumerate_commutative(std::size_t n,
                                                 UpTo        mode = UpTo::labelled);

  //! Lexicographically least relabelling of \p table over all n!
  //! permutations.
  CayleyTable canonical_form(CayleyTable const& table);

  bool is_canonical(CayleyTable const& table);

  namespace kernels {
    //! Single-threaded depth-first enumeration; the reference for
    //! enumerate_commutative.
    std::vector<CayleyTable> enumerate_commutative_serial(std::size_t n, UpTo mode);
    std::vector<CayleyTable> enumerate_commutative_parallel(std::size_t n,
                                                            UpTo        mode);
  }  // namespace kernels

}  // namespace cclosed
