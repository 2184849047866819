#include "doctest.h"

#include "cclosed/enumerate.hpp"
#include "cclosed/error.hpp"
#include "cclosed/quotients.hpp"
#include "cclosed/semigroup.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cclosed;
using namespace fixtures;

namespace {
  using Blocks = std::vector<std::vector<element_type>>;

  bool is_homomorphism(CayleyTable const& from, Quotient const& q) {
    for (element_type x = 0; x < from.size(); ++x) {
      for (element_type y = 0; y < from.size(); ++y) {
        if (q.projection[from(x, y)] != q.table(q.projection[x], q.projection[y])) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("ideal membership") {
    CHECK(is_ideal(T5, Subset::of(5, {0, 1})));
    CHECK_FALSE(is_ideal(L3, Subset::of(3, {2})));
    CHECK(is_ideal(L3, Subset(3)));
    CHECK(is_ideal(Z3, Subset(3)));
    auto const v = ideal_violation(L3, Subset::of(3, {2}));
    REQUIRE(v);
    CHECK_FALSE(is_ideal(L3, Subset::of(3, {2})));
  }

  TEST_CASE("generated ideals") {
    CHECK(generated_ideal(L3, Subset::of(3, {1})).carrier == Subset::of(3, {0, 1}));
    CHECK(generated_ideal(Z3, Subset::of(3, {1})).carrier == Subset::full(3));
    CHECK(generated_ideal(T5, Subset::of(5, {4})).carrier == Subset::of(5, {0, 1, 4}));
  }
}

TEST_SUITE("rees quotients") {
  TEST_CASE("taimanov modulo {0,1} is null") {
    auto const q = rees_quotient(T5, Subset::of(5, {0, 1}));
    CHECK(q.table == tables::null(4));
    CHECK(q.projection == std::vector<element_type>{0, 0, 1, 2, 3});
    CHECK(is_homomorphism(T5, q));
  }

  TEST_CASE("collapsing the bottom of a chain") {
    auto const q = rees_quotient(L3, Subset::of(3, {0}));
    CHECK(q.table == L3);
    CHECK(q.projection == std::vector<element_type>{0, 1, 2});
  }

  TEST_CASE("collapsing everything") {
    auto const q = rees_quotient(Z3, Subset::full(3));
    CHECK(q.table.size() == 1);
  }

  TEST_CASE("the empty ideal leaves the table alone") {
    auto const q = rees_quotient(L3, Subset(3));
    CHECK(q.table == L3);
    CHECK(q.projection == std::vector<element_type>{0, 1, 2});
  }

  TEST_CASE("non-ideals are rejected") {
    CHECK_THROWS_AS(rees_quotient(L3, Subset::of(3, {2})), PreconditionError);
  }

  TEST_CASE("composing rees quotients") {
    // T5 / {0,1}, then the image of {0,1,4}, equals T5 / {0,1,4}
    auto const first  = rees_quotient(T5, Subset::of(5, {0, 1}));
    auto const second = rees_quotient(first.table, Subset::of(4, {0, 3}));
    auto const direct = rees_quotient(T5, Subset::of(5, {0, 1, 4}));
    CHECK(second.table == direct.table);
  }

  TEST_CASE("rees congruence induces the same quotient") {
    auto const c = rees_congruence(T5, Subset::of(5, {0, 1}));
    CHECK(quotient_by_congruence(T5, c).table == rees_quotient(T5, Subset::of(5, {0, 1})).table);
  }
}

TEST_SUITE("congruences") {
  TEST_CASE("closure") {
    CHECK(congruence_closure(L3, {{1, 2}}).blocks() == Blocks{{0}, {1, 2}});
    CHECK(congruence_closure(L3, {{0, 2}}).blocks() == Blocks{{0, 1, 2}});
    CHECK(congruence_closure(L3, {}) == Congruence(3));
  }

  TEST_CASE("labels are canonical") {
    auto const c = Congruence::from_labels({5, 2, 5});
    CHECK(c.labels() == std::vector<std::size_t>{0, 1, 0});
    CHECK(c.class_count() == 2);
    CHECK(c == Congruence::from_blocks(3, {{1}, {0, 2}}));
  }

  TEST_CASE("quotients") {
    auto const l = quotient_by_congruence(L3, Congruence::from_blocks(3, {{0}, {1, 2}}));
    CHECK(l.table == tables::chain(2));
    auto const z = quotient_by_congruence(Z4, Congruence::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK(z.table == tables::cyclic_group(2));
    CHECK(is_homomorphism(Z4, z));
  }

  TEST_CASE("a partition that is not a congruence is rejected with a witness") {
    auto const c = Congruence::from_blocks(3, {{0, 2}, {1}});
    auto const v = congruence_violation(L3, c);
    REQUIRE(v);
    CHECK(c.class_of(v->x) == c.class_of(v->y));
    auto const ax = v->left ? L3(v->a, v->x) : L3(v->x, v->a);
    auto const ay = v->left ? L3(v->a, v->y) : L3(v->y, v->a);
    CHECK(c.class_of(ax) != c.class_of(ay));
    CHECK_THROWS_AS(quotient_by_congruence(L3, c), PreconditionError);
  }

  TEST_CASE("lifting idempotents") {
    auto const l = Congruence::from_blocks(3, {{0}, {1, 2}});
    CHECK(lift_idempotent(L3, l, 1) == 1);
    auto const z = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
    CHECK(lift_idempotent(Z4, z, 0) == 0);
    auto const t = rees_congruence(T5, Subset::of(5, {0, 1}));
    CHECK(lift_idempotent(T5, t, 0) == 0);
  }

  TEST_CASE("all congruences of a 3-chain") {
    // partitions of {0<1<2} compatible with min: every convex partition
    CHECK(all_congruences(L3).size() == 4);
    CHECK_THROWS_AS(all_congruences(tables::null(7)), SizeLimitError);
  }

  TEST_CASE("congruence enumeration agrees with a partition filter") {
    for (auto const& t : enumerate_commutative(3)) {
      std::size_t expected = 0;
      // restricted growth strings of length 3
      std::vector<std::vector<std::size_t>> rgs{
          {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
      for (auto const& labels : rgs) {
        auto const c  = Congruence::from_labels(labels);
        bool       ok = true;
        for (element_type x = 0; x < 3; ++x) {
          for (element_type y = 0; y < 3; ++y) {
            for (element_type a = 0; a < 3; ++a) {
              if (c.class_of(x) == c.class_of(y)) {
                ok = ok && c.class_of(t(a, x)) == c.class_of(t(a, y));
              }
            }
          }
        }
        expected += ok ? 1 : 0;
      }
      CHECK(all_congruences(t).size() == expected);
    }
  }

  TEST_CASE("quotients of order 4 tables preserve idempotents and H-classes") {
    for (auto const& t : enumerate_commutative(4)) {
      for (auto const& c : all_congruences(t)) {
        auto const q = quotient_by_congruence(t, c);
        CHECK(is_homomorphism(t, q));
        Subset image(q.table.size());
        for (auto e : idempotents(t).members()) {
          image.insert(q.projection[e]);
        }
        CHECK(idempotents(q.table) == image);
        for (auto e : idempotents(q.table).members()) {
          auto const s = lift_idempotent(t, c, e);
          Subset     lifted(q.table.size());
          for (auto x : h_class(t, s).members()) {
            lifted.insert(q.projection[x]);
          }
          CHECK(lifted == h_class(q.table, e));
        }
      }
    }
  }
}
