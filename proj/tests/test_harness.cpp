#include "doctest.h"

#include "cclosed/enumerate.hpp"
#include "cclosed/error.hpp"
#include "cclosed/lemma_suite.hpp"
#include "cclosed/quotients.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cclosed;
using namespace fixtures;

TEST_SUITE("enumeration") {
  TEST_CASE("labelled counts") {
    CHECK(enumerate_commutative(1).size() == 1);
    CHECK(enumerate_commutative(2).size() == 6);
    CHECK(enumerate_commutative(3).size() == 63);
    CHECK(enumerate_commutative(4).size() == 1140);
  }

  TEST_CASE("counts up to isomorphism") {
    CHECK(enumerate_commutative(1, UpTo::isomorphism).size() == 1);
    CHECK(enumerate_commutative(2, UpTo::isomorphism).size() == 3);
    CHECK(enumerate_commutative(3, UpTo::isomorphism).size() == 12);
    CHECK(enumerate_commutative(4, UpTo::isomorphism).size() == 58);
    CHECK(enumerate_commutative(5, UpTo::isomorphism).size() == 325);
  }

  TEST_CASE("order two classes are null, group and chain") {
    auto const t = enumerate_commutative(2, UpTo::isomorphism);
    REQUIRE(t.size() == 3);
    std::vector<std::size_t> idempotent_counts;
    for (auto const& x : t) {
      std::size_t count = 0;
      for (element_type a = 0; a < 2; ++a) {
        count += x(a, a) == a ? 1 : 0;
      }
      idempotent_counts.push_back(count);
    }
    std::sort(idempotent_counts.begin(), idempotent_counts.end());
    // Z2 and the null semigroup have one idempotent, the chain two
    CHECK(idempotent_counts == std::vector<std::size_t>{1, 1, 2});
  }

  TEST_CASE("matches the naive filter") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto expected = oracle::all_commutative_tables(n);
      auto actual   = enumerate_commutative(n);
      std::sort(actual.begin(), actual.end());
      CHECK(actual == expected);
      CHECK(enumerate_commutative(n, UpTo::isomorphism).size()
            == oracle::isomorphism_classes(expected));
    }
  }

  TEST_CASE("serial and parallel agree and are deterministic") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto mode : {UpTo::labelled, UpTo::isomorphism}) {
        CHECK(kernels::enumerate_commutative_serial(n, mode)
              == kernels::enumerate_commutative_parallel(n, mode));
      }
    }
  }

  TEST_CASE("canonical forms") {
    for (auto const& t : enumerate_commutative(3)) {
      auto const c = canonical_form(t);
      CHECK(is_canonical(c));
      CHECK(canonical_form(c) == c);
    }
    auto const iso = enumerate_commutative(3, UpTo::isomorphism);
    for (auto const& t : iso) {
      CHECK(is_canonical(t));
    }
  }

  TEST_CASE("order out of range") {
    CHECK_THROWS_AS(enumerate_commutative(0), ArgumentError);
    CHECK_THROWS_AS(enumerate_commutative(6), ArgumentError);
  }
}

TEST_SUITE("lemma suite") {
  TEST_CASE("named examples pass") {
    for (auto const& t : {Z4, T5, L3, N3, Z3}) {
      auto const r = lemma_suite(t);
      CHECK(r.all_passed());
      CHECK(r.failures().empty());
      CHECK(r.properties.size() == 13);
    }
  }

  TEST_CASE("non-commutative input is rejected") {
    CHECK_THROWS_AS(lemma_suite(LZ2), PreconditionError);
  }

  TEST_CASE("serial and parallel runs agree") {
    auto const tables   = enumerate_commutative(3);
    auto const serial   = kernels::run_suite_serial(tables);
    auto const parallel = kernels::run_suite_parallel(tables);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].all_passed() == parallel[i].all_passed());
    }
  }
}

TEST_SUITE("singleton square scan") {
  TEST_CASE("examples") {
    auto const n = singleton_square_scan(N3, 8);
    REQUIRE(n);
    CHECK(*n == Subset::full(3));
    CHECK_FALSE(singleton_square_scan(Z3, 8));
    auto const q = rees_quotient(T5, Subset::of(5, {0, 1}));
    auto const r = singleton_square_scan(q.table, 8);
    REQUIRE(r);
    // the sink squares into the sink as well, so the largest witness is everything
    CHECK(*r == Subset::full(4));
  }

  TEST_CASE("the cap bounds the witness size") {
    auto const r = singleton_square_scan(tables::null(6), 3);
    REQUIRE(r);
    CHECK(r->count() == 3);
    CHECK_FALSE(singleton_square_scan(N3, 1));
  }

  TEST_CASE("agrees with the subset oracle on every table of order 4") {
    for (auto const& t : enumerate_commutative(4)) {
      auto const expected = oracle::singleton_square(t);
      auto const actual   = singleton_square_scan(t, 8);
      if (expected == 0) {
        CHECK_FALSE(actual);
      } else {
        REQUIRE(actual);
        CHECK(actual->count() == static_cast<std::size_t>(std::popcount(expected)));
        CHECK(product(t, *actual, *actual).count() == 1);
      }
    }
  }
}
