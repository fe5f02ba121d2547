#pragma once

#include <map>
#include <vector>

#include "zinbiel/linalg.hpp"
#include "zinbiel/zin_ops.hpp"

namespace zinbiel {

// p(f) = -f, the membership test for the special Tortkara subspace.
bool is_lie(const ZinElement& f);

// Coefficients of f over {bar(w) : w skew word}. Requires is_lie(f) and no
// degree-1 support (NotLie); the rebuild is verified exactly (CorruptLie).
std::map<Word, Scalar> skew_coordinates(const ZinElement& f);

// All content-d words whose last two letters ascend, canonical order.
std::vector<Word> enumerate_skew_basis(const MultiDegree& d);

// Closed formula for the component dimension; equals the enumeration size.
Integer dim_st(const MultiDegree& d);

// Every total-degree-n component must satisfy D(f_n) = n! f_n.
bool is_jordan(const ZinElement& f);

// Sum over all n! arrangements of the letters; repeats give multiplicities.
ZinElement jordan_symmetrize(const std::vector<GeneratorId>& letters);

// Right-hand sides of the rewrite formulas for products of bar elements:
// bar(u) o bar(v), [bar(u), generator], [bar(u), bar(v)]. Branches exist for
// the word lengths stated with each formula; anything else is ShapeMismatch.
ZinElement lemma33_rhs(const Word& u, const Word& v);
ZinElement lemma34_rhs(const Word& u, GeneratorId g);
ZinElement lemma35_rhs(const Word& u, const Word& v);

// With b, c Lie: (ab)c - (ac)b and bc - cb are Lie again.
bool corollary23_check(const ZinElement& a, const ZinElement& b, const ZinElement& c);

}  // namespace zinbiel
