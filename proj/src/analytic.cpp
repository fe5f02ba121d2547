#include "zinbiel/analytic.hpp"

#include <algorithm>

namespace zinbiel {

namespace {

void require_same_cap(const TruncPoly& a, const TruncPoly& b) {
    if (a.cap != b.cap)
        throw CapMismatch("cannot combine polynomials with caps " + std::to_string(a.cap) +
                          " and " + std::to_string(b.cap));
}

}  // namespace

Scalar TruncPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coefficients.size())) return Scalar(0);
    return coefficients[static_cast<std::size_t>(k)];
}

void TruncPoly::trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

bool TruncPoly::operator==(const TruncPoly& o) const {
    return cap == o.cap && coefficients == o.coefficients;
}

TruncPoly tp_zero(int cap) {
    TruncPoly p;
    p.cap = cap;
    return p;
}

TruncPoly tp_monomial(int cap, int power, const Scalar& c) {
    TruncPoly p = tp_zero(cap);
    if (c == 0) return p;
    if (power > cap) {
        p.truncated = true;
        return p;
    }
    p.coefficients.assign(static_cast<std::size_t>(power) + 1, Scalar(0));
    p.coefficients.back() = c;
    return p;
}

TruncPoly tp_add(const TruncPoly& a, const TruncPoly& b) {
    require_same_cap(a, b);
    TruncPoly r = tp_zero(a.cap);
    r.truncated = a.truncated || b.truncated;
    r.coefficients.resize(std::max(a.coefficients.size(), b.coefficients.size()), Scalar(0));
    for (std::size_t k = 0; k < r.coefficients.size(); ++k)
        r.coefficients[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

TruncPoly tp_sub(const TruncPoly& a, const TruncPoly& b) {
    return tp_add(a, tp_scale(Scalar(-1), b));
}

TruncPoly tp_scale(const Scalar& c, const TruncPoly& a) {
    TruncPoly r = tp_zero(a.cap);
    r.truncated = a.truncated;
    if (c == 0) return r;
    r.coefficients.reserve(a.coefficients.size());
    for (const Scalar& x : a.coefficients) r.coefficients.push_back(c * x);
    r.trim();
    return r;
}

TruncPoly tp_mul(const TruncPoly& a, const TruncPoly& b) {
    require_same_cap(a, b);
    TruncPoly r = tp_zero(a.cap);
    r.truncated = a.truncated || b.truncated;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<Scalar> full(a.coefficients.size() + b.coefficients.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        if (a.coefficients[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients.size(); ++j)
            full[i + j] += a.coefficients[i] * b.coefficients[j];
    }
    std::size_t keep = std::min(full.size(), static_cast<std::size_t>(a.cap) + 1);
    for (std::size_t k = keep; k < full.size(); ++k)
        if (full[k] != 0) r.truncated = true;
    full.resize(keep);
    r.coefficients = std::move(full);
    r.trim();
    return r;
}

TruncPoly integrate(const TruncPoly& p) {
    TruncPoly r = tp_zero(p.cap);
    r.truncated = p.truncated;
    if (p.is_zero()) return r;
    r.coefficients.assign(std::min(p.coefficients.size() + 1, static_cast<std::size_t>(p.cap) + 1),
                          Scalar(0));
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
        if (p.coefficients[k] == 0) continue;
        if (k + 1 > static_cast<std::size_t>(p.cap)) {
            r.truncated = true;
            continue;
        }
        r.coefficients[k + 1] = p.coefficients[k] / Scalar(static_cast<long>(k) + 1);
    }
    r.trim();
    return r;
}

TruncPoly star_mul(const TruncPoly& a, const TruncPoly& b) {
    require_same_cap(a, b);
    return tp_mul(b, integrate(integrate(a)));
}

TruncPoly diamond_mul(const TruncPoly& a, const TruncPoly& b) {
    require_same_cap(a, b);
    return tp_add(star_mul(a, b), tp_mul(integrate(a), integrate(b)));
}

TruncPoly random_trunc_poly(SplitMix64& rng, int cap, int max_deg, int coeff_range) {
    TruncPoly p = tp_zero(cap);
    p.coefficients.assign(static_cast<std::size_t>(max_deg) + 1, Scalar(0));
    for (Scalar& c : p.coefficients) {
        long num = static_cast<long>(rng.below(2 * static_cast<std::uint64_t>(coeff_range) + 1)) -
                   coeff_range;
        long den = 1 + static_cast<long>(rng.below(3));
        c = make_scalar(num, den);
    }
    p.trim();
    return p;
}

namespace {

TruncPoly brk(const TruncPoly& a, const TruncPoly& b,
              TruncPoly (*mul)(const TruncPoly&, const TruncPoly&)) {
    return tp_sub(mul(a, b), mul(b, a));
}

TruncPoly star_brk(const TruncPoly& a, const TruncPoly& b) { return brk(a, b, star_mul); }

TruncPoly star_assoc(const TruncPoly& a, const TruncPoly& b, const TruncPoly& c) {
    return tp_sub(star_mul(a, star_mul(b, c)), star_mul(star_mul(a, b), c));
}

TruncPoly star_jac(const TruncPoly& a, const TruncPoly& b, const TruncPoly& c) {
    return tp_add(tp_add(star_brk(star_brk(a, b), c), star_brk(star_brk(b, c), a)),
                  star_brk(star_brk(c, a), b));
}

// Trials are sized so no product can reach the cap; a tripped flag here
// means the degree bookkeeping is wrong, not that the trial is unlucky.
void require_exact(const TruncPoly& r) {
    if (r.truncated)
        throw CertificateViolation("truncation inside a trial sized to be truncation-free");
}

}  // namespace

bool Remark1Report::all_pass() const {
    return diamond_zinbiel_failures == 0 && commutator_agreement_failures == 0 &&
           star_left_commutative_failures == 0 && star_associator_cycle_failures == 0 &&
           tortkara_residual_failures == 0 && star_witness_differs && bracket_example_agrees;
}

Remark1Report check_remark1(int cap, int trials, std::uint64_t seed) {
    if (cap < 8)
        throw CapTooSmall("cap " + std::to_string(cap) +
                          " leaves no room for truncation-free trials; need at least 8");
    Remark1Report rep;
    rep.cap = cap;
    rep.trials = trials;
    rep.seed = seed;
    // A triple product adds 4 to the total input degree, a nested-commutator
    // quadruple adds 6; cap the inputs so every intermediate stays exact.
    rep.triple_degree = std::clamp((cap - 4) / 3, 0, 2);
    rep.quadruple_degree = std::clamp((cap - 6) / 4, 0, 2);

    const TruncPoly one = tp_monomial(cap, 0, Scalar(1));
    const TruncPoly x = tp_monomial(cap, 1, Scalar(1));

    // Frozen witness that ⋆ breaks the right-Zinbiel identity at a=b=c=1:
    // 1⋆(1⋆1) = x^4/4 while (1⋆1 + 1⋆1)⋆1 = x^4/12.
    const TruncPoly s11 = star_mul(one, one);
    rep.star_nested = star_mul(one, s11);
    rep.star_split = star_mul(tp_add(s11, s11), one);
    require_exact(rep.star_nested);
    require_exact(rep.star_split);
    rep.star_witness_differs = !(rep.star_nested == rep.star_split);

    // The two products share a commutator: a⋄b - b⋄a = a⋆b - b⋆a because the
    // symmetric correction (∫a)(∫b) cancels.  Worked value [1,x] = x^3/3.
    rep.bracket_one_x = brk(one, x, star_mul);
    rep.bracket_example_agrees = rep.bracket_one_x == brk(one, x, diamond_mul);

    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const TruncPoly a = random_trunc_poly(rng, cap, rep.triple_degree, 4);
        const TruncPoly b = random_trunc_poly(rng, cap, rep.triple_degree, 4);
        const TruncPoly c = random_trunc_poly(rng, cap, rep.triple_degree, 4);

        // Right-Zinbiel identity for ⋄: a⋄(b⋄c) = (a⋄b + b⋄a)⋄c.
        TruncPoly dz = tp_sub(diamond_mul(a, diamond_mul(b, c)),
                              diamond_mul(tp_add(diamond_mul(a, b), diamond_mul(b, a)), c));
        require_exact(dz);
        if (!dz.is_zero()) ++rep.diamond_zinbiel_failures;

        TruncPoly agree = tp_sub(brk(a, b, star_mul), brk(a, b, diamond_mul));
        require_exact(agree);
        if (!agree.is_zero()) ++rep.commutator_agreement_failures;

        // Left-commutativity of ⋆: a⋆(b⋆c) = b⋆(a⋆c).
        TruncPoly lc = tp_sub(star_mul(a, star_mul(b, c)), star_mul(b, star_mul(a, c)));
        require_exact(lc);
        if (!lc.is_zero()) ++rep.star_left_commutative_failures;

        const TruncPoly qa = random_trunc_poly(rng, cap, rep.quadruple_degree, 4);
        const TruncPoly qb = random_trunc_poly(rng, cap, rep.quadruple_degree, 4);
        const TruncPoly qc = random_trunc_poly(rng, cap, rep.quadruple_degree, 4);
        const TruncPoly qd = random_trunc_poly(rng, cap, rep.quadruple_degree, 4);

        // ([a,b],c,d) + ([b,c],a,d) + ([c,a],b,d) = 0 with the ⋆-associator.
        TruncPoly cyc = tp_add(tp_add(star_assoc(star_brk(qa, qb), qc, qd),
                                      star_assoc(star_brk(qb, qc), qa, qd)),
                               star_assoc(star_brk(qc, qa), qb, qd));
        require_exact(cyc);
        if (!cyc.is_zero()) ++rep.star_associator_cycle_failures;

        // Tortkara residuals of the ⋆-commutator algebra.
        TruncPoly r2 = tp_sub(star_brk(star_brk(qa, qb), star_brk(qc, qb)),
                              star_brk(star_jac(qa, qb, qc), qb));
        TruncPoly r3 = tp_sub(tp_add(star_brk(star_brk(qa, qb), star_brk(qc, qd)),
                                     star_brk(star_brk(qa, qd), star_brk(qc, qb))),
                              tp_add(star_brk(star_jac(qa, qb, qc), qd),
                                     star_brk(star_jac(qa, qd, qc), qb)));
        require_exact(r2);
        require_exact(r3);
        if (!r2.is_zero() || !r3.is_zero()) ++rep.tortkara_residual_failures;
    }
    return rep;
}

}  // namespace zinbiel
