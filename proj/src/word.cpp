#include "zinbiel/word.hpp"

#include <algorithm>
#include <numeric>

#include "zinbiel/scalar.hpp"

namespace zinbiel {

bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
}

int MultiDegree::total() const {
    int t = 0;
    for (const auto& [id, c] : counts) t += c;
    return t;
}

MultiDegree word_multidegree(const Word& w) {
    MultiDegree d;
    for (GeneratorId g : w.letters) ++d.counts[g];
    return d;
}

std::vector<Word> enumerate_words(const MultiDegree& d) {
    std::vector<GeneratorId> letters;
    for (const auto& [id, c] : d.counts) letters.insert(letters.end(), c, id);
    std::vector<Word> out;
    if (letters.empty()) return out;
    // next_permutation from a sorted start yields every arrangement of the
    // multiset exactly once, in lexicographic order.
    do {
        out.push_back(Word{letters});
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<MultiDegree> proper_subdegrees(const MultiDegree& d) {
    std::vector<std::pair<GeneratorId, int>> gens(d.counts.begin(), d.counts.end());
    std::vector<MultiDegree> out;
    std::vector<int> pick(gens.size(), 0);
    for (;;) {
        // advance the mixed-radix counter
        std::size_t i = 0;
        while (i < gens.size() && pick[i] == gens[i].second) {
            pick[i] = 0;
            ++i;
        }
        if (i == gens.size()) break;
        ++pick[i];
        MultiDegree sub;
        int tot = 0;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (pick[k] > 0) sub.counts[gens[k].first] = pick[k];
            tot += pick[k];
        }
        if (tot < d.total()) out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.counts < b.counts;
    });
    return out;
}

GeneratorId Alphabet::intern(const std::string& name) {
    GeneratorId id = id_of(name);
    if (id != 0) return id;
    names_.push_back(name);
    return static_cast<GeneratorId>(names_.size());
}

GeneratorId Alphabet::id_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<GeneratorId>(i + 1);
    return 0;
}

std::string Alphabet::name_of(GeneratorId id) const {
    if (id >= 1 && static_cast<std::size_t>(id) <= names_.size()) return names_[id - 1];
    return "g" + std::to_string(id);
}

Alphabet Alphabet::default_letters(std::size_t q) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < q && i < 26; ++i) names.push_back(std::string(1, char('a' + i)));
    return Alphabet(std::move(names));
}

}  // namespace zinbiel
