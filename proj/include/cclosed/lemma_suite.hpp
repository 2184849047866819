#pragma once

// Structural properties of finite commutative semigroups that the closedness
// characterizations rely on, checked exhaustively on a single table.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cclosed/table.hpp"

namespace cclosed {

  struct PropertyResult {
    std::string name;
    bool        passed;
    //! first counterexample found, in a human-readable form
    std::string counterexample;
  };

  struct SuiteReport {
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    //! names of the failed properties
    std::vector<std::string> failures() const;
  };

  //! Checks, for a commutative table:
  //!   root-absorbs-h-class   (root_inf H_e) H_e and H_e (root_inf H_e) lie in H_e
  //!   h-class-is-group       H_e contains e, is closed and has inverses
  //!   pi-central-factor      pi(xy) = pi(x)pi(y) for central y
  //!   h-class-product        H_e H_f lies in H_ef for idempotents e, f
  //!   pi-order               pi(x)pi(y) <= pi(xy)
  //!   pi-clifford-factor     pi(xy) = pi(x)pi(y) for y in H(X)
  //!   pi-symmetric           pi(xy) = pi(yx)
  //!   pi-homomorphism        pi(xy) = pi(x)pi(y)
  //!   clifford-part-closed   H(X) is a subsemigroup
  //!   z-sets-ascending       Z_k lies in Z_{k+1}
  //!   subgroup-translation   |AA| >= |A| for A inside one H_e
  //!   quotient-idempotents   E(X/~) = q[E(X)] for every congruence
  //!   lift-h-class           q[H_s] = H_e for the least idempotent s over
  //!                          each idempotent e of X/~, every congruence
  //! Congruences are enumerated only for tables of order at most 6.
  SuiteReport lemma_suite(CayleyTable const& table);

  //! A set A with |A| >= 2, |A| <= max_subset and AA a singleton, of the
  //! largest possible size (lexicographically least among those), or
  //! nothing.
  std::optional<Subset> singleton_square_scan(CayleyTable const& table,
                                              std::size_t        max_subset);

  namespace kernels {
    std::vector<SuiteReport> run_suite_serial(std::vector<CayleyTable> const& tables);
    //! One table per iteration, results stored by index.
    std::vector<SuiteReport> run_suite_parallel(std::vector<CayleyTable> const& tables);
  }  // namespace kernels

}  // namespace cclosed
