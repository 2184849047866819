#include "doctest.h"

#include "cclosed/classify.hpp"

#include "fixtures.hpp"
#include "sampler.hpp"

using namespace cclosed;
using namespace fixtures;

namespace {
  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

  void check_same(ClosednessVerdict const& a, ClosednessVerdict const& b) {
    CHECK(a.c_closed == b.c_closed);
    CHECK(a.ideally_closed == b.ideally_closed);
    CHECK(a.projectively_closed == b.projectively_closed);
  }
}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("taimanov is closed but not ideally closed") {
    auto const v = classify(Descriptor::taimanov());
    CHECK(v.c_closed);
    CHECK_FALSE(v.ideally_closed);
    CHECK_FALSE(v.projectively_closed);
    REQUIRE(v.failing_condition);
    CHECK(v.failing_condition->name == "almost-clifford");
    CHECK(contains(v.failing_condition->witness, "infinite"));
    CHECK(v.c_closed_citation == "Thm1.4");
    CHECK(v.ideal_citation == "Thm1.7");
  }

  TEST_CASE("unbounded group") {
    auto const v = classify(Descriptor::group({{GroupFactor::prufer(3)}}));
    CHECK_FALSE(v.c_closed);
    CHECK_FALSE(v.ideally_closed);
    CHECK_FALSE(v.projectively_closed);
    REQUIRE(v.failing_condition);
    CHECK(v.failing_condition->name == "subgroups-bounded");
  }

  TEST_CASE("infinite chain") {
    auto const v = classify(Descriptor::semilattice(OmegaChain{}));
    CHECK_FALSE(v.c_closed);
    CHECK_FALSE(v.ideally_closed);
    REQUIRE(v.failing_condition);
    CHECK(v.failing_condition->name == "chain-finite");
  }

  TEST_CASE("null is not closed") {
    auto const v = classify(Descriptor::null());
    CHECK_FALSE(v.c_closed);
    REQUIRE(v.failing_condition);
    CHECK(v.failing_condition->name == "no-singleton-square");
  }

  TEST_CASE("finite tables are closed in every sense") {
    for (auto const& t : enumerate_commutative(3)) {
      auto const v = classify(Descriptor::finite_table(t));
      CHECK(v.c_closed);
      CHECK(v.ideally_closed);
      CHECK(v.projectively_closed);
      CHECK_FALSE(v.failing_condition);
      CHECK(v.c_closed_citation == "finite");
    }
  }
}

TEST_SUITE("group criterion") {
  TEST_CASE("examples") {
    auto const bounded = classify_group({{GroupFactor::cyclic(2, Multiplicity::omega())}});
    CHECK(bounded.c_closed);
    CHECK(bounded.profile.exponent == 2);
    CHECK(bounded.c_closed_citation == "Thm1.3");
    CHECK_FALSE(classify_group({{GroupFactor::integers()}}).c_closed);
    CHECK_FALSE(classify_group({{GroupFactor::cyclic_tower(2)}}).c_closed);
  }

  TEST_CASE("agrees with the general route") {
    sampler::DescriptorSampler s(17);
    for (int i = 0; i < 200; ++i) {
      auto const g = s.group();
      check_same(classify_group(g), classify(Descriptor::group(g)));
    }
  }
}

TEST_SUITE("semilattice criterion") {
  TEST_CASE("examples") {
    auto const a = classify_semilattice(OmegaAntichainZero{});
    CHECK(a.c_closed);
    CHECK(a.ideally_closed);
    CHECK(a.projectively_closed);
    CHECK(a.c_closed_citation == "Thm1.2");
    CHECK(a.ideal_citation == "Cor5.2");
    auto const c = classify_semilattice(OmegaChain{});
    CHECK_FALSE(c.c_closed);
    CHECK_FALSE(c.projectively_closed);
    auto const l = classify_semilattice(FinitePoset{L3, "L3"});
    CHECK(l.c_closed);
    CHECK(l.projectively_closed);
  }

  TEST_CASE("agrees with the general route") {
    sampler::DescriptorSampler s(19);
    for (int i = 0; i < 100; ++i) {
      auto const sl = s.semilattice();
      check_same(classify_semilattice(sl), classify(Descriptor::semilattice(sl)));
    }
  }
}

TEST_SUITE("verdict properties") {
  TEST_CASE("implication chain and equal ideal/projective verdicts") {
    sampler::DescriptorSampler s(23);
    for (int i = 0; i < 1000; ++i) {
      auto const d = s.descriptor(4);
      auto const v = classify(d);
      CAPTURE(render(d));
      CHECK((!v.projectively_closed || v.ideally_closed));
      CHECK((!v.ideally_closed || v.c_closed));
      CHECK(v.ideally_closed == v.projectively_closed);
      CHECK(v.failing_condition.has_value() == !(v.c_closed && v.ideally_closed));
    }
  }

  TEST_CASE("closed products have closed factors") {
    sampler::DescriptorSampler s(29);
    for (int i = 0; i < 1000; ++i) {
      auto const left  = s.descriptor(3);
      auto const right = s.descriptor(3);
      if (classify(Descriptor::product(left, right)).c_closed) {
        CAPTURE(render(left));
        CAPTURE(render(right));
        CHECK(classify(left).c_closed);
        CHECK(classify(right).c_closed);
      }
    }
  }
}

TEST_SUITE("explain") {
  TEST_CASE("null report cites the main characterization and the witness") {
    auto const text = explain(classify(Descriptor::null()));
    CHECK(contains(text, "Theorem 1.4"));
    CHECK(contains(text, "AA = {0}"));
  }

  TEST_CASE("finite report") {
    auto const text = explain(classify(Descriptor::finite_table(Z3)));
    CHECK(contains(text, "finite => all properties hold"));
  }

  TEST_CASE("taimanov report cites the precedent") {
    auto const text = explain(classify(Descriptor::taimanov()));
    CHECK(contains(text, "Example 1.6"));
  }

  TEST_CASE("reports are deterministic") {
    auto const d = Descriptor::product(Descriptor::taimanov(),
                                       Descriptor::group({{GroupFactor::prufer(2)}}));
    CHECK(explain(classify(d)) == explain(classify(d)));
  }
}
