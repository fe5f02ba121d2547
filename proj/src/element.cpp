#include "zinbiel/element.hpp"

#include <algorithm>

namespace zinbiel {

ZinElement ZinElement::from_word(Word w, Scalar c) {
    ZinElement e;
    if (c != 0) e.terms_.emplace_back(std::move(w), std::move(c));
    return e;
}

ZinElement ZinElement::from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    ZinElement e;
    e.terms_.reserve(raw.size());
    for (auto& t : raw) {
        if (!e.terms_.empty() && e.terms_.back().first == t.first) {
            e.terms_.back().second += t.second;
            if (e.terms_.back().second == 0) e.terms_.pop_back();
        } else if (t.second != 0) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

Scalar ZinElement::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w) return it->second;
    return Scalar(0);
}

// Linear merge of two sorted term lists.
static std::vector<ZinElement::Term> merge_terms(const std::vector<ZinElement::Term>& a,
                                                 const std::vector<ZinElement::Term>& b,
                                                 int sign_b) {
    std::vector<ZinElement::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign_b > 0 ? b[j].second : Scalar(-b[j].second));
            ++j;
        } else {
            Scalar c = sign_b > 0 ? Scalar(a[i].second + b[j].second)
                                  : Scalar(a[i].second - b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

ZinElement ZinElement::operator+(const ZinElement& o) const {
    ZinElement e;
    e.terms_ = merge_terms(terms_, o.terms_, +1);
    return e;
}

ZinElement ZinElement::operator-(const ZinElement& o) const {
    ZinElement e;
    e.terms_ = merge_terms(terms_, o.terms_, -1);
    return e;
}

ZinElement ZinElement::operator-() const {
    ZinElement e = *this;
    for (auto& t : e.terms_) t.second = -t.second;
    return e;
}

ZinElement& ZinElement::operator+=(const ZinElement& o) {
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

ZinElement& ZinElement::operator-=(const ZinElement& o) {
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

ZinElement operator*(const Scalar& c, const ZinElement& e) {
    if (c == 0) return ZinElement();
    std::vector<ZinElement::Term> raw = e.terms();
    for (auto& t : raw) t.second *= c;
    return ZinElement::from_terms(std::move(raw));
}

}  // namespace zinbiel
