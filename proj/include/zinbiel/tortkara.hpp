#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zinbiel/linalg.hpp"
#include "zinbiel/zin_ops.hpp"

namespace zinbiel {

// Anticommutative tree monomial. The tree is stored in preorder: 0 opens an
// internal node followed by its two subtrees, a positive entry is a leaf
// generator. Canonical form puts the subtree with the smaller minimal leaf on
// the left (code order breaks ties), with every swap absorbed into sign.
struct AcMono {
    std::vector<std::int32_t> code;
    int sign = 1;

    std::size_t leaf_count() const;
    bool operator==(const AcMono&) const = default;
};
// Leaf count, then preorder code, then sign.
bool operator<(const AcMono& a, const AcMono& b);

AcMono ac_leaf(GeneratorId g);
// Joins two trees without canonicalizing.
AcMono ac_node(const AcMono& l, const AcMono& r);

// Canonical signed form; nullopt when some node has identical children.
std::optional<AcMono> ac_canonicalize(const AcMono& m);

// Element of the free anticommutative algebra: canonical monomials (sign +1)
// with nonzero rational coefficients.
struct AcElement {
    std::map<AcMono, Scalar> terms;

    // Folds m's sign into the coefficient; drops cancellations.
    void add(AcMono m, Scalar c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const AcElement&) const = default;
};

AcElement ac_mono_element(const AcMono& m);
AcElement ac_add(const AcElement& a, const AcElement& b);
AcElement ac_sub(const AcElement& a, const AcElement& b);
AcElement ac_scale(const Scalar& c, const AcElement& a);
AcElement ac_mul(const AcElement& a, const AcElement& b);
AcElement ac_jacobiator(const AcElement& a, const AcElement& b, const AcElement& c);

// Evaluates the tree with the commutator as product, times the sign.
ZinElement eval_ac(const AcMono& m, const std::map<GeneratorId, ZinElement>& assignment);
ZinElement eval_ac_element(const AcElement& e, const std::map<GeneratorId, ZinElement>& assignment);

// J(a,b,c) = [[a,b],c] + [[b,c],a] + [[c,a],b].
ZinElement jacobiator(const ZinElement& a, const ZinElement& b, const ZinElement& c);

// Residuals of the defining identity (ab)(cb) = J(a,b,c)b and its
// linearization (ab)(cd) + (ad)(cb) = J(a,b,c)d + J(a,d,c)b, computed with
// the commutator product. Both vanish identically.
std::pair<ZinElement, ZinElement> verify_tortkara(const ZinElement& a, const ZinElement& b,
                                                  const ZinElement& c, const ZinElement& d);

// Residual of the left-multiplication rewrite
// (ab)(cd) = 1/2 J(b,c,d)a - 1/2 J(a,c,d)b - 1/2 J(a,b,d)c + 1/2 J(a,b,c)d.
ZinElement degree4_relation_check(const ZinElement& a, const ZinElement& b, const ZinElement& c,
                                  const ZinElement& d);

// All canonical multilinear monomials on variables 1..n; (2n-3)!! of them.
std::vector<AcMono> multilinear_ac_basis(int n);

// Multilinear consequences of the linearized identity at degree n, reduced
// over the canonical monomial coordinates.
struct ConsequenceSpan {
    Coordinateizer<AcMono> coords;
    Span span;
};
ConsequenceSpan tortkara_consequence_span(int n);

// Ambient monomial count minus the consequence rank (the consequence span is
// zero below degree 4).
Integer free_tortkara_multilinear_dim(int n);

// Multilinear survey at degree n: quotient dimension against the skew
// component, and coset representatives of evaluation-kernel elements not
// already known consequences.
struct ScanReport {
    int n = 0;
    Integer ambient_dim;
    Integer consequence_rank;
    Integer quotient_dim;
    Integer special_dim;
    std::vector<AcElement> kernel;
};
ScanReport s_identity_scan(int n);

// Rank of the commutator evaluations of the 2^(n-2) left-normed bracket
// words [[..[[x,y],a3]..],an] with letters from {x,y}.
int left_normed_rank(int n);

}  // namespace zinbiel
