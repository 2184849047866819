#pragma once

#include <optional>
#include <string>

#include "cclosed/descriptor.hpp"

namespace cclosed {

  struct FailingCondition {
    //! "periodic", "chain-finite", "subgroups-bounded",
    //! "no-singleton-square" or "almost-clifford"
    std::string name;
    std::string witness;
  };

  //! Closedness of a commutative semigroup. The three notions satisfy
  //! projectively => ideally => C-closed; for commutative semigroups the
  //! first two coincide.
  struct ClosednessVerdict {
    bool c_closed;
    bool ideally_closed;
    bool projectively_closed;

    PredicateProfile profile;

    //! First failing condition of c_closed, else of ideally_closed.
    std::optional<FailingCondition> failing_condition;

    //! Stable tags of the governing results: "Thm1.4", "Thm1.7", "Thm1.3",
    //! "Thm1.2", "Cor5.2", or "finite".
    std::string c_closed_citation;
    std::string ideal_citation;
  };

  //! C-closed iff periodic, chain-finite, all subgroups bounded and no
  //! infinite A with AA a singleton. Ideally (= projectively) closed iff
  //! chain-finite, almost Clifford and all subgroups bounded.
  ClosednessVerdict classify(Descriptor const& d);

  //! A commutative group is closed iff it is bounded. Decided from the
  //! factor list alone.
  ClosednessVerdict classify_group(GroupSpec const& g);

  //! A semilattice is closed (in all three senses) iff it is chain-finite.
  ClosednessVerdict classify_semilattice(SemilatticeSpec const& s);

  //! Multi-line report citing the governing result for each verdict and the
  //! witness for each failure.
  std::string explain(ClosednessVerdict const& v);

}  // namespace cclosed
