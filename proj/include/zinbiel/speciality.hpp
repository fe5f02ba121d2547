#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/criteria.hpp"
#include "zinbiel/linalg.hpp"

namespace zinbiel {

// Homogeneous generators of an ideal of the skew subalgebra; every generator
// satisfies p(g) = -g.
struct IdealPresentation {
    std::vector<ZinElement> generators;
    Alphabet alphabet;
    std::string label;
};

// Validates the invariants: NotLieInput for a non-skew generator, ZinError
// for an inhomogeneous or zero one.
IdealPresentation make_presentation(std::vector<ZinElement> gens, Alphabet alphabet,
                                    std::string label);

// Span of {bar(w)} over the skew basis at d, in full word coordinates.
Span st_component(const MultiDegree& d);

// Multidegree-d component of the bracket-closed ideal the generators produce
// inside the skew subalgebra.
Span st_ideal_component(const IdealPresentation& p, const MultiDegree& d);

// Multidegree-d component of the two-sided ideal the generators produce in
// the full algebra under the Zinbiel product.
Span zin_ideal_component(const IdealPresentation& p, const MultiDegree& d);

// Inclusion test (full-ideal intersection with the skew component inside the
// skew ideal) at one multidegree; a failure carries an explicit witness.
struct CohnVerdict {
    bool holds = false;
    MultiDegree at;
    std::optional<ZinElement> witness;
};
CohnVerdict cohn_check(const IdealPresentation& p, const MultiDegree& d);

// The explicit three-generator failure: w = x o g1 - y o g2 + z o g3 lies in
// the full ideal and the skew subalgebra but not in the skew ideal. Throws
// CertificateViolation if any recorded check fails to verify.
struct CounterexampleReport {
    std::vector<ZinElement> generators;  // g1, g2, g3
    ZinElement w;
    MultiDegree at;
    bool combination_matches = false;  // w = x o g1 - y o g2 + z o g3
    bool w_is_skew = false;            // p(w) = -w
    bool unsolvable = false;           // w outside the bracket span
    std::size_t bracket_rank = 0;      // rank of {[x,g1],[y,g2],[z,g3]}
    std::size_t extended_rank = 0;     // rank after adjoining w
    bool cohn_fails = false;
};
CounterexampleReport counterexample_certificate();

}  // namespace zinbiel
