#include "doctest.h"

#include "cclosed/enumerate.hpp"
#include "cclosed/error.hpp"
#include "cclosed/power.hpp"
#include "cclosed/semigroup.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cclosed;
using namespace fixtures;

TEST_SUITE("power semigroup") {
  TEST_CASE("two-chain gives a three-chain") {
    auto const p = power_semigroup(tables::chain(2));
    // indices: 0 = {0}, 1 = {1}, 2 = {0,1}; order {0} <= {0,1} <= {1}
    CHECK(p.table() == CayleyTable{{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
    CHECK(validate(p.table()).associative);
  }

  TEST_CASE("element count") {
    CHECK(power_semigroup(Z3).table().size() == 7);
  }

  TEST_CASE("null base") {
    auto const p = power_semigroup(N3);
    auto const zero = PowerSemigroup::singleton(0);
    for (auto v : p.table().entries()) {
      CHECK(v == zero);
    }
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(power_semigroup(tables::null(power_semigroup_max_base + 1)),
                    SizeLimitError);
  }

  TEST_CASE("subset products") {
    CHECK(subset_product(L3, Subset::of(3, {1, 2}), Subset::of(3, {0})) == Subset::of(3, {0}));
    CHECK(subset_product(Z3, Subset::of(3, {0, 1}), Subset::of(3, {0, 1})) == Subset::full(3));
    CHECK(subset_product(T5, Subset::of(5, {3}), Subset::of(5, {4})) == Subset::of(5, {T5(3, 4)}));
    CHECK_THROWS_AS(subset_product(L3, Subset(3), Subset::of(3, {0})), ArgumentError);
  }

  TEST_CASE("basic open sets") {
    auto const b = basic_open(L3, Subset::of(3, {0, 1}));
    CHECK(b == std::vector<Subset>{Subset::of(3, {0}), Subset::of(3, {1}), Subset::of(3, {0, 1})});
    CHECK(basic_open(L3, Subset::of(3, {2})) == std::vector<Subset>{Subset::of(3, {2})});
    CHECK(basic_open(L3, Subset::full(3)).size() == 7);
    CHECK_THROWS_AS(basic_open(L3, Subset(3)), ArgumentError);
  }

  TEST_CASE("mask round trip") {
    auto const s = Subset::of(5, {1, 3});
    CHECK(to_mask(s) == 0b1010U);
    CHECK(from_mask(5, 0b1010U) == s);
    auto const p = power_semigroup(Z3);
    CHECK(p.subset(PowerSemigroup::index_of(0b101U)) == Subset::of(3, {0, 2}));
  }

  TEST_CASE("serial and parallel kernels agree with the oracle") {
    for (auto const& t : enumerate_commutative(3)) {
      auto const serial   = kernels::power_table_serial(t);
      auto const parallel = kernels::power_table_parallel(t);
      CHECK(serial == parallel);
      std::uint32_t const count = (1U << t.size()) - 1;
      for (std::uint32_t u = 1; u <= count; ++u) {
        for (std::uint32_t v = 1; v <= count; ++v) {
          CHECK(serial[(u - 1) * count + (v - 1)] == oracle::product_mask(t, u, v));
        }
      }
    }
  }

  TEST_CASE("non-commutative base gives a non-commutative power semigroup") {
    auto const r = validate(power_semigroup(LZ2).table());
    CHECK(r.associative);
    CHECK_FALSE(r.commutative);
  }
}
