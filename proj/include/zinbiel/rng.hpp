#pragma once

#include <cstdint>

#include "zinbiel/element.hpp"

namespace zinbiel {

// splitmix64: tiny, deterministic across platforms, splittable.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Independent stream for a sub-task; keeps trial results order-free.
    SplitMix64 split() { return SplitMix64(next() ^ 0xd2b74407b1ce6e93ULL); }
};

// Uniform word over generators 1..num_gens with length in [min_len, max_len].
inline Word random_word(SplitMix64& rng, int num_gens, int min_len, int max_len) {
    int len = min_len + static_cast<int>(rng.below(max_len - min_len + 1));
    Word w;
    w.letters.reserve(len);
    for (int i = 0; i < len; ++i)
        w.letters.push_back(static_cast<GeneratorId>(1 + rng.below(num_gens)));
    return w;
}

inline Scalar random_nonzero_coeff(SplitMix64& rng, int coeff_range) {
    long c = 1 + static_cast<long>(rng.below(coeff_range));
    if (rng.below(2) == 0) c = -c;
    return Scalar(c);
}

// Up to max_terms random words of one multidegree (letter rearrangements of a
// random word), nonzero coefficients in [-coeff_range, coeff_range].
inline ZinElement random_homogeneous(SplitMix64& rng, int num_gens, int degree, int max_terms,
                                     int coeff_range) {
    Word base = random_word(rng, num_gens, degree, degree);
    int terms = 1 + static_cast<int>(rng.below(max_terms));
    std::vector<ZinElement::Term> raw;
    for (int t = 0; t < terms; ++t) {
        Word w = base;
        for (std::size_t i = w.letters.size(); i > 1; --i)
            std::swap(w.letters[i - 1], w.letters[rng.below(i)]);
        raw.emplace_back(std::move(w), random_nonzero_coeff(rng, coeff_range));
    }
    ZinElement e = ZinElement::from_terms(std::move(raw));
    // Random cancellation could leave zero; fall back to the base word.
    if (e.is_zero()) e = ZinElement::from_word(base);
    return e;
}

inline ZinElement random_element(SplitMix64& rng, int num_gens, int max_degree, int max_terms,
                                 int coeff_range) {
    int terms = 1 + static_cast<int>(rng.below(max_terms));
    std::vector<ZinElement::Term> raw;
    for (int t = 0; t < terms; ++t)
        raw.emplace_back(random_word(rng, num_gens, 1, max_degree),
                         random_nonzero_coeff(rng, coeff_range));
    ZinElement e = ZinElement::from_terms(std::move(raw));
    if (e.is_zero()) e = ZinElement::from_word(random_word(rng, num_gens, 1, max_degree));
    return e;
}

}  // namespace zinbiel
