#pragma once

#include <cstdint>
#include <vector>

#include "zinbiel/errors.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/scalar.hpp"

namespace zinbiel {

// One-variable polynomial with exact rational coefficients, truncated at
// degree `cap`.  coefficients[k] is the coefficient of x^k; trailing zeros
// are trimmed, so degree() == coefficients.size() - 1 for nonzero polys.
// `truncated` records whether any nonzero term has been dropped at the cap
// anywhere in the history of this value; results of checks are only trusted
// when the flag is still false.
struct TruncPoly {
    std::vector<Scalar> coefficients;
    int cap = 0;
    bool truncated = false;

    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Scalar coeff(int k) const;
    void trim();
    bool operator==(const TruncPoly& o) const;
};

TruncPoly tp_zero(int cap);
TruncPoly tp_monomial(int cap, int power, const Scalar& c);
TruncPoly tp_add(const TruncPoly& a, const TruncPoly& b);
TruncPoly tp_sub(const TruncPoly& a, const TruncPoly& b);
TruncPoly tp_scale(const Scalar& c, const TruncPoly& a);
TruncPoly tp_mul(const TruncPoly& a, const TruncPoly& b);

// x^k -> x^{k+1}/(k+1); terms pushed past the cap are dropped and flagged.
TruncPoly integrate(const TruncPoly& p);

// a ⋆ b = b * ∫∫a.  Throws CapMismatch when caps differ.
TruncPoly star_mul(const TruncPoly& a, const TruncPoly& b);

// a ⋄ b = b * ∫∫a + (∫a)(∫b).  Throws CapMismatch when caps differ.
TruncPoly diamond_mul(const TruncPoly& a, const TruncPoly& b);

// Randomized + worked-example verification of the integration-operator
// algebras: ⋄ satisfies the right-Zinbiel identity, ⋆ does not (recorded
// witness), both products induce the same commutator, ⋆ satisfies its two
// displayed identities, and the ⋆-commutator passes the Tortkara residual
// checks.  Only truncation-free trials count; input degrees are capped so
// that no trial can truncate.  Throws CapTooSmall when cap < 8.
struct Remark1Report {
    int cap = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int triple_degree = 0;     // max input degree for three-element trials
    int quadruple_degree = 0;  // max input degree for four-element trials

    int diamond_zinbiel_failures = 0;
    int commutator_agreement_failures = 0;
    int star_left_commutative_failures = 0;
    int star_associator_cycle_failures = 0;
    int tortkara_residual_failures = 0;

    TruncPoly star_nested;      // 1 ⋆ (1 ⋆ 1)
    TruncPoly star_split;       // (1 ⋆ 1 + 1 ⋆ 1) ⋆ 1
    bool star_witness_differs = false;  // the two above differ, so ⋆ is not Zinbiel

    TruncPoly bracket_one_x;    // [1, x], same under ⋆ and ⋄
    bool bracket_example_agrees = false;

    bool all_pass() const;
};

Remark1Report check_remark1(int cap, int trials, std::uint64_t seed);

// Uniform random polynomial of degree <= max_deg with small rational
// coefficients (zero coefficients allowed, value may have lower degree).
TruncPoly random_trunc_poly(SplitMix64& rng, int cap, int max_deg, int coeff_range);

}  // namespace zinbiel
