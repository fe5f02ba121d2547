#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zinbiel/element.hpp"

namespace zinbiel {

// u o v: concatenation when |v| = 1, otherwise riffle shuffles of u with v
// minus its last letter, each suffixed by that letter.
ZinElement word_zinbiel_mul(const Word& u, const Word& v);

// Bilinear extensions.
ZinElement zin_mul(const ZinElement& f, const ZinElement& g);
ZinElement shuffle_words(const Word& u, const Word& v);
ZinElement shuffle_mul(const ZinElement& f, const ZinElement& g);

ZinElement commutator(const ZinElement& f, const ZinElement& g);
ZinElement anticommutator(const ZinElement& f, const ZinElement& g);

// Linear involution: negates single letters, swaps the last two letters of
// longer words.
ZinElement p_map(const ZinElement& f);

// f - p(f); rejects length-1 support (DegreeOneSupport).
ZinElement bar(const ZinElement& f);

// Word -> left-nested anticommutator of its letters; a single letter maps to
// itself.
ZinElement dynkin(const ZinElement& f);

// nullopt when the element is zero or has mixed multidegrees.
std::optional<MultiDegree> multidegree(const ZinElement& f);
std::vector<std::pair<MultiDegree, ZinElement>> homogeneous_components(const ZinElement& f);

// f with the letter appended to every word; equals f o x_g.
ZinElement append_letter(const ZinElement& f, GeneratorId g);

}  // namespace zinbiel
