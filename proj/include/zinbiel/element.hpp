#pragma once

#include <utility>
#include <vector>

#include "zinbiel/scalar.hpp"
#include "zinbiel/word.hpp"

namespace zinbiel {

// Terms kept sorted in canonical term order with no zero coefficients, so
// equality is representation equality.
class ZinElement {
public:
    using Term = std::pair<Word, Scalar>;

    ZinElement() = default;

    static ZinElement from_word(Word w, Scalar c = Scalar(1));
    // Sorts, merges duplicates, drops zeros; the workhorse for products.
    static ZinElement from_terms(std::vector<Term> raw);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;

    ZinElement operator+(const ZinElement& o) const;
    ZinElement operator-(const ZinElement& o) const;
    ZinElement operator-() const;
    ZinElement& operator+=(const ZinElement& o);
    ZinElement& operator-=(const ZinElement& o);
    bool operator==(const ZinElement&) const = default;

private:
    std::vector<Term> terms_;
};

ZinElement operator*(const Scalar& c, const ZinElement& e);

}  // namespace zinbiel
