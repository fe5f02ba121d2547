#include "zinbiel/zin_ops.hpp"

#include <algorithm>

#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

// Emits every riffle interleaving of u[iu..] and v[iv..] continued by suffix,
// with coefficient c, into raw. Cost C(|u|+|v|, |u|) words.
void emit_riffles(const std::vector<GeneratorId>& u, std::size_t iu,
                  const std::vector<GeneratorId>& v, std::size_t iv,
                  std::vector<GeneratorId>& acc, const std::vector<GeneratorId>& suffix,
                  const Scalar& c, std::vector<ZinElement::Term>& raw) {
    if (iu == u.size() && iv == v.size()) {
        Word w;
        w.letters = acc;
        w.letters.insert(w.letters.end(), suffix.begin(), suffix.end());
        raw.emplace_back(std::move(w), c);
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        emit_riffles(u, iu + 1, v, iv, acc, suffix, c, raw);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        emit_riffles(u, iu, v, iv + 1, acc, suffix, c, raw);
        acc.pop_back();
    }
}

void emit_word_zinbiel(const Word& u, const Word& v, const Scalar& c,
                       std::vector<ZinElement::Term>& raw) {
    if (v.length() == 1) {
        Word w = u;
        w.letters.push_back(v.letters.back());
        raw.emplace_back(std::move(w), c);
        return;
    }
    std::vector<GeneratorId> vprefix(v.letters.begin(), v.letters.end() - 1);
    std::vector<GeneratorId> suffix{v.letters.back()};
    std::vector<GeneratorId> acc;
    acc.reserve(u.length() + v.length());
    emit_riffles(u.letters, 0, vprefix, 0, acc, suffix, c, raw);
}

void emit_word_shuffle(const Word& u, const Word& v, const Scalar& c,
                       std::vector<ZinElement::Term>& raw) {
    std::vector<GeneratorId> acc;
    acc.reserve(u.length() + v.length());
    static const std::vector<GeneratorId> kNoSuffix;
    emit_riffles(u.letters, 0, v.letters, 0, acc, kNoSuffix, c, raw);
}

}  // namespace

ZinElement word_zinbiel_mul(const Word& u, const Word& v) {
    std::vector<ZinElement::Term> raw;
    emit_word_zinbiel(u, v, Scalar(1), raw);
    return ZinElement::from_terms(std::move(raw));
}

ZinElement zin_mul(const ZinElement& f, const ZinElement& g) {
    std::vector<ZinElement::Term> raw;
    for (const auto& [wu, cu] : f.terms())
        for (const auto& [wv, cv] : g.terms()) emit_word_zinbiel(wu, wv, cu * cv, raw);
    return ZinElement::from_terms(std::move(raw));
}

ZinElement shuffle_words(const Word& u, const Word& v) {
    std::vector<ZinElement::Term> raw;
    emit_word_shuffle(u, v, Scalar(1), raw);
    return ZinElement::from_terms(std::move(raw));
}

ZinElement shuffle_mul(const ZinElement& f, const ZinElement& g) {
    std::vector<ZinElement::Term> raw;
    for (const auto& [wu, cu] : f.terms())
        for (const auto& [wv, cv] : g.terms()) emit_word_shuffle(wu, wv, cu * cv, raw);
    return ZinElement::from_terms(std::move(raw));
}

ZinElement commutator(const ZinElement& f, const ZinElement& g) {
    return zin_mul(f, g) - zin_mul(g, f);
}

ZinElement anticommutator(const ZinElement& f, const ZinElement& g) {
    return zin_mul(f, g) + zin_mul(g, f);
}

ZinElement p_map(const ZinElement& f) {
    std::vector<ZinElement::Term> raw;
    raw.reserve(f.term_count());
    for (const auto& [w, c] : f.terms()) {
        if (w.length() == 1) {
            raw.emplace_back(w, -c);
        } else {
            Word s = w;
            std::swap(s.letters[s.length() - 2], s.letters[s.length() - 1]);
            raw.emplace_back(std::move(s), c);
        }
    }
    return ZinElement::from_terms(std::move(raw));
}

ZinElement bar(const ZinElement& f) {
    for (const auto& [w, c] : f.terms())
        if (w.length() == 1) throw DegreeOneSupport("bar is undefined on length-1 words");
    return f - p_map(f);
}

ZinElement dynkin(const ZinElement& f) {
    ZinElement out;
    for (const auto& [w, c] : f.terms()) {
        ZinElement e = ZinElement::from_word(Word{{w.letters[0]}});
        for (std::size_t k = 1; k < w.length(); ++k)
            e = anticommutator(e, ZinElement::from_word(Word{{w.letters[k]}}));
        out += c * e;
    }
    return out;
}

std::optional<MultiDegree> multidegree(const ZinElement& f) {
    if (f.is_zero()) return std::nullopt;
    MultiDegree d = word_multidegree(f.terms().front().first);
    for (const auto& [w, c] : f.terms())
        if (word_multidegree(w) != d) return std::nullopt;
    return d;
}

std::vector<std::pair<MultiDegree, ZinElement>> homogeneous_components(const ZinElement& f) {
    std::map<MultiDegree, std::vector<ZinElement::Term>> buckets;
    for (const auto& t : f.terms()) buckets[word_multidegree(t.first)].push_back(t);
    std::vector<std::pair<MultiDegree, ZinElement>> out;
    out.reserve(buckets.size());
    for (auto& [d, raw] : buckets) out.emplace_back(d, ZinElement::from_terms(std::move(raw)));
    return out;
}

ZinElement append_letter(const ZinElement& f, GeneratorId g) {
    // Appending the same letter everywhere preserves the term order.
    std::vector<ZinElement::Term> raw = f.terms();
    for (auto& [w, c] : raw) w.letters.push_back(g);
    return ZinElement::from_terms(std::move(raw));
}

}  // namespace zinbiel
