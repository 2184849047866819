#include "cclosed/classify.hpp"

#include <sstream>
#include <variant>

namespace cclosed {

  namespace {
    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string cite(std::string const& tag) {
      if (tag == "Thm1.2") {
        return "Theorem 1.2 (semilattices)";
      }
      if (tag == "Thm1.3") {
        return "Theorem 1.3 (commutative groups)";
      }
      if (tag == "Thm1.4") {
        return "Theorem 1.4 (commutative semigroups)";
      }
      if (tag == "Thm1.7") {
        return "Theorem 1.7 (ideal and projective closedness)";
      }
      if (tag == "Cor5.2") {
        return "Corollary 5.2 (semilattices)";
      }
      return tag;
    }
  }  // namespace

  ClosednessVerdict classify(Descriptor const& d) {
    ClosednessVerdict v;
    v.profile    = evaluate(d);
    auto const& p = v.profile;

    v.c_closed = p.periodic.value && p.chain_finite.value
                 && p.subgroups_bounded.value && !p.has_singleton_square.value;
    v.ideally_closed = p.chain_finite.value && p.almost_clifford.value
                       && p.subgroups_bounded.value;
    v.projectively_closed = v.ideally_closed;

    if (!p.periodic.value) {
      v.failing_condition = {"periodic", p.periodic.witness};
    } else if (!p.chain_finite.value) {
      v.failing_condition = {"chain-finite", p.chain_finite.witness};
    } else if (!p.subgroups_bounded.value) {
      v.failing_condition = {"subgroups-bounded", p.subgroups_bounded.witness};
    } else if (p.has_singleton_square.value) {
      v.failing_condition = {"no-singleton-square",
                             p.has_singleton_square.witness};
    } else if (!p.almost_clifford.value) {
      v.failing_condition = {"almost-clifford", p.almost_clifford.witness};
    }

    bool const finite   = p.cardinality.is_finite();
    v.c_closed_citation = finite ? "finite" : "Thm1.4";
    v.ideal_citation    = finite ? "finite" : "Thm1.7";
    return v;
  }

  ClosednessVerdict classify_group(GroupSpec const& g) {
    ClosednessVerdict v;
    v.profile = evaluate(Descriptor::group(g));

    bool bounded = true;
    for (auto const& f : g.factors) {
      if (f.kind != GroupFactor::Kind::cyclic) {
        bounded             = false;
        v.failing_condition = {"subgroups-bounded",
                               "factor " + render(f) + " is not bounded"};
        break;
      }
    }
    v.c_closed            = bounded;
    v.ideally_closed      = bounded;
    v.projectively_closed = bounded;
    v.c_closed_citation   = "Thm1.3";
    v.ideal_citation      = "Thm1.3";
    return v;
  }

  ClosednessVerdict classify_semilattice(SemilatticeSpec const& s) {
    ClosednessVerdict v;
    v.profile = evaluate(Descriptor::semilattice(s));

    bool const chain_finite = !std::holds_alternative<OmegaChain>(s);
    if (!chain_finite) {
      v.failing_condition
          = {"chain-finite", "(semilattice chain-omega) is an infinite chain"};
    }
    v.c_closed            = chain_finite;
    v.ideally_closed      = chain_finite;
    v.projectively_closed = chain_finite;
    v.c_closed_citation   = "Thm1.2";
    v.ideal_citation      = "Cor5.2";
    return v;
  }

  std::string explain(ClosednessVerdict const& v) {
    std::ostringstream os;
    auto const&        p = v.profile;
    os << "cardinality: "
       << (p.cardinality.is_finite() ? std::to_string(*p.cardinality.finite)
                                     : std::string("countably infinite"))
       << '\n';

    if (p.cardinality.is_finite()) {
      os << "finite => all properties hold\n";
    }

    auto line = [&](char const* name, Predicate const& pred) {
      os << "  " << name << ": " << yes_no(pred.value);
      if (!pred.witness.empty()) {
        os << " (" << pred.witness << ')';
      }
      os << '\n';
    };
    os << "conditions:\n";
    line("periodic", p.periodic);
    line("chain-finite", p.chain_finite);
    line("subgroups bounded", p.subgroups_bounded);
    line("almost Clifford", p.almost_clifford);
    line("infinite set with singleton square", p.has_singleton_square);

    os << "C-closed: " << yes_no(v.c_closed) << " [" << cite(v.c_closed_citation)
       << "]\n";
    os << "ideally C-closed: " << yes_no(v.ideally_closed) << " ["
       << cite(v.ideal_citation) << "]\n";
    os << "projectively C-closed: " << yes_no(v.projectively_closed) << " ["
       << cite(v.ideal_citation) << "]\n";

    if (v.failing_condition) {
      os << "failing condition: " << v.failing_condition->name << " ("
         << v.failing_condition->witness << ")\n";
    }
    if (v.c_closed && !v.ideally_closed) {
      os << "note: C-closed with a Rees quotient that is not C-closed, as for "
            "the Taimanov semigroup (Example 1.6)\n";
    }
    return os.str();
  }

}  // namespace cclosed
