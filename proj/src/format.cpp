#include "zinbiel/format.hpp"

namespace zinbiel {

namespace {

// "<sign><num>/<den> " with the sign always explicit and den defaulting to 1.
std::string term_prefix(const Scalar& c) {
    Scalar a = abs(c);
    return (c < 0 ? "-" : "+") + a.get_num().get_str() + "/" + a.get_den().get_str() + " ";
}

struct AcCursor {
    const std::vector<std::int32_t>* code;
    std::size_t at = 0;
};

std::string ac_rec(AcCursor& cur, const Alphabet& names) {
    std::int32_t v = (*cur.code)[cur.at++];
    if (v > 0) return names.name_of(v);
    std::string left = ac_rec(cur, names);
    std::string right = ac_rec(cur, names);
    return "[" + left + "," + right + "]";
}

}  // namespace

std::string format_scalar(const Scalar& s) { return s.get_str(); }

std::string format_word(const Word& w, const Alphabet& names) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += '.';
        out += names.name_of(w.letters[i]);
    }
    return out;
}

std::string format_element(const ZinElement& e, const Alphabet& names) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : e.terms()) {
        if (!out.empty()) out += '\n';
        out += term_prefix(c) + format_word(w, names);
    }
    return out;
}

std::string format_multidegree(const MultiDegree& d, const Alphabet& names) {
    std::string out;
    for (const auto& [g, m] : d.counts) {
        if (!out.empty()) out += ' ';
        out += names.name_of(g) + ":" + std::to_string(m);
    }
    return out;
}

std::string format_ac_mono(const AcMono& m, const Alphabet& names) {
    AcCursor cur{&m.code};
    std::string body = ac_rec(cur, names);
    return m.sign < 0 ? "-" + body : body;
}

std::string format_ac_element(const AcElement& e, const Alphabet& names) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : e.terms) {
        if (!out.empty()) out += '\n';
        // Stored monomials keep sign +1; fold a stray sign into the
        // coefficient anyway so the rendering never shows "-[...]".
        Scalar eff = m.sign < 0 ? Scalar(-c) : c;
        AcCursor cur{&m.code};
        out += term_prefix(eff) + ac_rec(cur, names);
    }
    return out;
}

}  // namespace zinbiel
