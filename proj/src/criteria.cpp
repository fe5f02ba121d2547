#include "zinbiel/criteria.hpp"

#include <algorithm>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

Word subword(const Word& w, std::size_t begin, std::size_t end) {
    return Word{{w.letters.begin() + begin, w.letters.begin() + end}};
}

Word swap_last_two(const Word& w) {
    Word r = w;
    std::swap(r.letters[r.length() - 2], r.letters[r.length() - 1]);
    return r;
}

Word concat(Word w, std::initializer_list<GeneratorId> tail) {
    w.letters.insert(w.letters.end(), tail);
    return w;
}

ZinElement barw(const Word& w) { return bar(ZinElement::from_word(w)); }

// (E) . a . b : append the two letters to every word of E.
ZinElement append2(const ZinElement& e, GeneratorId a, GeneratorId b) {
    return append_letter(append_letter(e, a), b);
}

}  // namespace

bool is_lie(const ZinElement& f) { return p_map(f) == -f; }

std::map<Word, Scalar> skew_coordinates(const ZinElement& f) {
    if (!is_lie(f)) throw NotLie("skew_coordinates: p(f) != -f");
    std::map<Word, Scalar> coords;
    for (const auto& [w, c] : f.terms()) {
        if (w.length() < 2) throw NotLie("skew_coordinates: degree-1 support");
        if (w.letters[w.length() - 2] < w.letters[w.length() - 1]) coords.emplace(w, c);
    }
    ZinElement rebuilt;
    for (const auto& [w, c] : coords) rebuilt += c * barw(w);
    if (!(rebuilt == f)) throw CorruptLie("skew_coordinates: rebuild mismatch");
    return coords;
}

std::vector<Word> enumerate_skew_basis(const MultiDegree& d) {
    if (d.total() < 2) throw DegreeTooSmall("enumerate_skew_basis: total degree < 2");
    std::vector<Word> basis;
    for (const Word& w : enumerate_words(d))
        if (w.letters[w.length() - 2] < w.letters[w.length() - 1]) basis.push_back(w);
    return basis;
}

Integer dim_st(const MultiDegree& d) {
    const int n = d.total();
    if (n < 2) throw DegreeTooSmall("dim_st: total degree < 2");
    Integer denom = 1;
    std::vector<long> mult;
    for (const auto& [id, m] : d.counts) {
        (void)id;
        denom *= factorial(m);
        mult.push_back(m);
    }
    const Integer base = factorial(n - 2);
    Integer sum = 0;
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t j = i + 1; j < mult.size(); ++j)
            sum += base * mult[i] * mult[j] / denom;
    return sum;
}

bool is_jordan(const ZinElement& f) {
    // D preserves multidegree, so the total-degree test splits componentwise.
    for (const auto& [d, fd] : homogeneous_components(f))
        if (!(dynkin(fd) == Scalar(factorial(d.total())) * fd)) return false;
    return true;
}

ZinElement jordan_symmetrize(const std::vector<GeneratorId>& letters) {
    if (letters.empty()) throw ZinError("jordan_symmetrize: empty letter list");
    std::vector<GeneratorId> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    // Each distinct arrangement arises from one position permutation per
    // rearrangement of equal letters.
    Integer repeats = 1;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        repeats *= factorial(static_cast<long>(j - i));
        i = j;
    }
    const Scalar coeff{repeats};
    std::vector<std::pair<Word, Scalar>> terms;
    do {
        terms.emplace_back(Word{sorted}, coeff);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return ZinElement::from_terms(std::move(terms));
}

ZinElement lemma33_rhs(const Word& u, const Word& v) {
    const std::size_t m = u.length(), n = v.length();
    if (m < 2 || n < 2) throw ShapeMismatch("lemma33_rhs: both words need length >= 2");
    const Word up = swap_last_two(u);
    const Word head = subword(u, 0, m - 1);    // drops the last letter
    const Word headp = subword(up, 0, m - 1);  // drops the second-to-last letter
    const GeneratorId im = u.letters[m - 1], im1 = u.letters[m - 2];
    if (n == 2) {
        const GeneratorId j1 = v.letters[0], j2 = v.letters[1];
        return barw(concat(u, {j1, j2})) - barw(concat(up, {j1, j2}))
             + append2(shuffle_words(head, Word{{j1}}), im, j2)
             - append2(shuffle_words(headp, Word{{j1}}), im1, j2)
             - append2(shuffle_words(head, Word{{j2}}), im, j1)
             + append2(shuffle_words(headp, Word{{j2}}), im1, j1);
    }
    const Word vpp = subword(v, 0, n - 2);
    const Word vhead = subword(v, 0, n - 1);
    const Word vtw = concat(subword(v, 0, n - 2), {v.letters[n - 1]});
    const GeneratorId jn = v.letters[n - 1], jn1 = v.letters[n - 2];
    return bar(append2(shuffle_words(u, vpp), jn1, jn))
         - bar(append2(shuffle_words(up, vpp), jn1, jn))
         + append2(shuffle_words(head, vhead), im, jn)
         - append2(shuffle_words(headp, vhead), im1, jn)
         - append2(shuffle_words(head, vtw), im, jn1)
         + append2(shuffle_words(headp, vtw), im1, jn1);
}

ZinElement lemma34_rhs(const Word& u, GeneratorId g) {
    const std::size_t m = u.length();
    if (m < 2) throw ShapeMismatch("lemma34_rhs: word needs length >= 2");
    const GeneratorId i1 = u.letters[0], im = u.letters[m - 1], im1 = u.letters[m - 2];
    if (m == 2) {
        return barw(Word{{i1, im, g}}) - barw(Word{{im, i1, g}}) - barw(Word{{g, i1, im}});
    }
    return barw(concat(u, {g})) - barw(concat(swap_last_two(u), {g}))
         - bar(append2(shuffle_words(Word{{g}}, subword(u, 0, m - 2)), im1, im));
}

ZinElement lemma35_rhs(const Word& u, const Word& v) {
    const std::size_t m = u.length(), n = v.length();
    if (m == 2 && n == 2) {
        const GeneratorId i1 = u.letters[0], i2 = u.letters[1];
        const GeneratorId j1 = v.letters[0], j2 = v.letters[1];
        return bar(append2(barw(u), j1, j2)) - bar(append2(barw(v), i1, i2))
             + bar(append2(shuffle_words(Word{{i1}}, Word{{j1}}), i2, j2))
             - bar(append2(shuffle_words(Word{{i1}}, Word{{j2}}), i2, j1))
             + bar(append2(shuffle_words(Word{{i2}}, Word{{j2}}), i1, j1))
             - bar(append2(shuffle_words(Word{{i2}}, Word{{j1}}), i1, j2));
    }
    if (m < 3 || n < 3) throw ShapeMismatch("lemma35_rhs: lengths must be (2,2) or both >= 3");
    const Word up = swap_last_two(u), vp = swap_last_two(v);
    const Word upp = subword(u, 0, m - 2), vpp = subword(v, 0, n - 2);
    const Word uhead = subword(u, 0, m - 1), vhead = subword(v, 0, n - 1);
    const Word utw = subword(up, 0, m - 1), vtw = subword(vp, 0, n - 1);
    const GeneratorId im = u.letters[m - 1], im1 = u.letters[m - 2];
    const GeneratorId jn = v.letters[n - 1], jn1 = v.letters[n - 2];
    return bar(append2(shuffle_words(u, vpp), jn1, jn))
         - bar(append2(shuffle_words(up, vpp), jn1, jn))
         - bar(append2(shuffle_words(v, upp), im1, im))
         + bar(append2(shuffle_words(vp, upp), im1, im))
         + bar(append2(shuffle_words(uhead, vhead), im, jn))
         - bar(append2(shuffle_words(utw, vhead), im1, jn))
         - bar(append2(shuffle_words(uhead, vtw), im, jn1))
         + bar(append2(shuffle_words(utw, vtw), im1, jn1));
}

bool corollary23_check(const ZinElement& a, const ZinElement& b, const ZinElement& c) {
    if (!is_lie(b) || !is_lie(c)) throw NotLieInput("corollary23_check: b and c must satisfy p(f) = -f");
    const ZinElement first = zin_mul(zin_mul(a, b), c) - zin_mul(zin_mul(a, c), b);
    const ZinElement second = zin_mul(b, c) - zin_mul(c, b);
    return is_lie(first) && is_lie(second);
}

}  // namespace zinbiel
