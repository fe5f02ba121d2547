#pragma once

#include <string>

#include "zinbiel/element.hpp"
#include "zinbiel/tortkara.hpp"

namespace zinbiel {

// "n" or "n/d", lowest terms, leading '-' when negative.
std::string format_scalar(const Scalar& s);

// Letters joined by '.', e.g. "x.y.z".
std::string format_word(const Word& w, const Alphabet& names);

// One term per line in canonical order, "<sign><num>/<den> <word>" with an
// explicit sign and denominator, e.g. "+3/2 x.x.y"; the zero element is "0".
std::string format_element(const ZinElement& e, const Alphabet& names);

// "a:1 b:2" in generator-id order.
std::string format_multidegree(const MultiDegree& d, const Alphabet& names);

// Nested brackets, e.g. "[[a,b],c]"; a leading '-' when the stored sign is -1.
std::string format_ac_mono(const AcMono& m, const Alphabet& names);

// Same line shape as format_element with bracket monomials.
std::string format_ac_element(const AcElement& e, const Alphabet& names);

}  // namespace zinbiel
