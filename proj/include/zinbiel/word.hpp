#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zinbiel {

// 1-based generator index; display names live in Alphabet.
using GeneratorId = std::int32_t;

struct Word {
    std::vector<GeneratorId> letters;  // length >= 1

    std::size_t length() const { return letters.size(); }
    bool operator==(const Word&) const = default;
};

// Canonical term order: ascending length, then lexicographic on letters.
bool operator<(const Word& a, const Word& b);

struct MultiDegree {
    std::map<GeneratorId, int> counts;  // zero counts never stored

    int total() const;
    bool operator==(const MultiDegree&) const = default;
    bool operator<(const MultiDegree& other) const { return counts < other.counts; }
};

MultiDegree word_multidegree(const Word& w);

// All words with the given content, in canonical term order.
std::vector<Word> enumerate_words(const MultiDegree& d);

// All sub-multidegrees 0 < d' < d (componentwise), ascending total then map order.
std::vector<MultiDegree> proper_subdegrees(const MultiDegree& d);

// Display names; ids are assigned in first-appearance order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

    // Returns the existing id or assigns the next one.
    GeneratorId intern(const std::string& name);
    // 0 when the name is unknown.
    GeneratorId id_of(const std::string& name) const;
    std::string name_of(GeneratorId id) const;  // "g<id>" fallback past the end
    std::size_t size() const { return names_.size(); }

    // a, b, c, ... for q <= 26.
    static Alphabet default_letters(std::size_t q);

private:
    std::vector<std::string> names_;
};

}  // namespace zinbiel
