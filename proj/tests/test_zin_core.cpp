#include <doctest.h>

#include "oracles.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/zin_ops.hpp"

using namespace zinbiel;

namespace {

Word W(std::initializer_list<GeneratorId> ls) { return Word{std::vector<GeneratorId>(ls)}; }
ZinElement E(std::initializer_list<GeneratorId> ls) { return ZinElement::from_word(W(ls)); }

}  // namespace

TEST_CASE("word zinbiel product base cases and worked example") {
    // single-letter right factor concatenates
    CHECK(word_zinbiel_mul(W({1}), W({2})) == E({1, 2}));
    CHECK(word_zinbiel_mul(W({1, 2}), W({3})) == E({1, 2, 3}));
    // (ab)(cd) = abcd + acbd + cabd, with a,b,c,d = 1,2,3,4
    ZinElement expect = E({1, 2, 3, 4}) + E({1, 3, 2, 4}) + E({3, 1, 2, 4});
    CHECK(word_zinbiel_mul(W({1, 2}), W({3, 4})) == expect);
}

TEST_CASE("zin_mul is bilinear") {
    ZinElement zero;
    CHECK(zin_mul(zero, E({1})) == zero);
    CHECK(zin_mul(E({1}) + E({2}), E({3})) == E({1, 3}) + E({2, 3}));
    // (ab) o (cd + dc), expanded by the subset-placement oracle and frozen
    ZinElement g = E({3, 4}) + E({4, 3});
    ZinElement frozen = E({1, 2, 3, 4}) + E({1, 3, 2, 4}) + E({3, 1, 2, 4}) +
                        E({1, 2, 4, 3}) + E({1, 4, 2, 3}) + E({4, 1, 2, 3});
    CHECK(zin_mul(E({1, 2}), g) == frozen);
    CHECK(oracles::zinbiel_subsets(W({1, 2}), W({3, 4})) +
              oracles::zinbiel_subsets(W({1, 2}), W({4, 3})) ==
          frozen);
}

TEST_CASE("shuffle product examples") {
    CHECK(shuffle_words(W({1}), W({2})) == E({1, 2}) + E({2, 1}));
    // (ab) sh (cd) = abcd+acbd+cabd+acdb+cadb+cdab
    ZinElement expect = E({1, 2, 3, 4}) + E({1, 3, 2, 4}) + E({3, 1, 2, 4}) +
                        E({1, 3, 4, 2}) + E({3, 1, 4, 2}) + E({3, 4, 1, 2});
    CHECK(shuffle_words(W({1, 2}), W({3, 4})) == expect);
    CHECK(shuffle_words(W({1}), W({1})) == Scalar(2) * E({1, 1}));
    // ab sh c = abc + acb + cab
    CHECK(shuffle_mul(E({1, 2}), E({3})) == E({1, 2, 3}) + E({1, 3, 2}) + E({3, 1, 2}));
    CHECK(shuffle_mul(E({1}), E({2}) + E({3})) ==
          E({1, 2}) + E({2, 1}) + E({1, 3}) + E({3, 1}));
}

TEST_CASE("shuffle agrees with subset-placement oracle") {
    auto words = oracles::all_words_up_to(3, 4);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.length() + v.length() > 6) continue;
            CHECK(shuffle_words(u, v) == oracles::shuffle_subsets(u, v));
        }
}

TEST_CASE("products agree with the stated recursions, |u|+|v| <= 8") {
    auto words = oracles::all_words_up_to(2, 7);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.length() + v.length() > 8) continue;
            REQUIRE(word_zinbiel_mul(u, v) == oracles::zinbiel_recursion(u, v));
            REQUIRE(shuffle_words(u, v) == oracles::shuffle_recursion(u, v));
        }
}

TEST_CASE("commutator and anticommutator basics") {
    CHECK(commutator(E({1}), E({2})) == E({1, 2}) - E({2, 1}));
    ZinElement f = E({1, 2}) + E({2, 1});
    CHECK(commutator(f, f).is_zero());
    CHECK(anticommutator(E({1}), E({2})) == E({1, 2}) + E({2, 1}));
}

TEST_CASE("Zinbiel identity on random triples") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        SplitMix64 sub = rng.split();
        ZinElement f = random_element(sub, 3, 2, 3, 3);
        ZinElement g = random_element(sub, 3, 2, 3, 3);
        ZinElement h = random_element(sub, 3, 2, 3, 3);
        ZinElement lhs = zin_mul(f, zin_mul(g, h));
        ZinElement rhs = zin_mul(zin_mul(f, g) + zin_mul(g, f), h);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("shuffle is commutative and associative; anticommutator too") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        SplitMix64 sub = rng.split();
        ZinElement f = random_element(sub, 3, 2, 2, 3);
        ZinElement g = random_element(sub, 3, 2, 2, 3);
        ZinElement h = random_element(sub, 3, 2, 2, 3);
        REQUIRE(shuffle_mul(f, g) == shuffle_mul(g, f));
        REQUIRE(shuffle_mul(shuffle_mul(f, g), h) == shuffle_mul(f, shuffle_mul(g, h)));
        REQUIRE(anticommutator(f, g) == anticommutator(g, f));
        REQUIRE(anticommutator(anticommutator(f, g), h) ==
                anticommutator(f, anticommutator(g, h)));
    }
}

TEST_CASE("p map on words and linearity") {
    CHECK(p_map(E({1})) == -E({1}));
    CHECK(p_map(E({1, 2})) == E({2, 1}));
    // uabv -> uavb with u,a,b,v = 3,1,2,4
    CHECK(p_map(E({3, 1, 2, 4})) == E({3, 1, 4, 2}));
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        SplitMix64 sub = rng.split();
        ZinElement f = random_element(sub, 3, 4, 4, 3);
        REQUIRE(p_map(p_map(f)) == f);
        ZinElement g = random_element(sub, 3, 4, 4, 3);
        REQUIRE(p_map(f + g) == p_map(f) + p_map(g));
    }
}

TEST_CASE("bar definition, support rule, and p-antisymmetry") {
    CHECK(bar(E({1, 2})) == E({1, 2}) - E({2, 1}));
    CHECK(bar(E({1, 2, 2})).is_zero());
    CHECK_THROWS_AS(bar(E({1})), DegreeOneSupport);
    // bar((ab)(uv)) = bar(abuv) + bar(uabv) + bar(aubv) with a,b,u,v = 1,2,3,4
    ZinElement prod = zin_mul(zin_mul(E({1}), E({2})), zin_mul(E({3}), E({4})));
    CHECK(bar(prod) == bar(E({1, 2, 3, 4})) + bar(E({3, 1, 2, 4})) + bar(E({1, 3, 2, 4})));
    SplitMix64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        SplitMix64 sub = rng.split();
        ZinElement f = random_element(sub, 3, 4, 4, 3);
        ZinElement b = bar(zin_mul(f, E({1})));  // padding keeps support length >= 2
        REQUIRE(p_map(b) == -b);
    }
}

TEST_CASE("dynkin on words matches the permutation-sum oracle") {
    CHECK(dynkin(E({1})) == E({1}));
    CHECK(dynkin(E({1, 2})) == E({1, 2}) + E({2, 1}));
    CHECK(dynkin(E({1, 2, 3})) == oracles::dynkin_permutation_sum(W({1, 2, 3})));
    CHECK(oracles::dynkin_permutation_sum(W({1, 2, 3})).term_count() == 6);
    SplitMix64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        SplitMix64 sub = rng.split();
        Word w = random_word(sub, 3, 1, 5);
        REQUIRE(dynkin(ZinElement::from_word(w)) == oracles::dynkin_permutation_sum(w));
    }
}

TEST_CASE("grading splits and reassembles") {
    ZinElement f = E({1, 2}) + E({2, 1});
    auto d = multidegree(f);
    REQUIRE(d.has_value());
    CHECK(d->counts == std::map<GeneratorId, int>{{1, 1}, {2, 1}});
    CHECK(!multidegree(E({1}) + E({1, 2})).has_value());
    CHECK(!multidegree(ZinElement()).has_value());
    CHECK(homogeneous_components(ZinElement()).empty());
    ZinElement mixed = E({1}) + E({1, 2}) + E({2, 1}) + E({1, 1});
    auto comps = homogeneous_components(mixed);
    CHECK(comps.size() == 3);
    ZinElement sum;
    for (const auto& [deg, comp] : comps) {
        auto cd = multidegree(comp);
        REQUIRE(cd.has_value());
        CHECK(*cd == deg);
        sum += comp;
    }
    CHECK(sum == mixed);
}

TEST_CASE("enumerate_words covers a content class in canonical order") {
    MultiDegree d;
    d.counts = {{1, 2}, {2, 1}};
    auto words = enumerate_words(d);
    REQUIRE(words.size() == 3);
    CHECK(words[0] == W({1, 1, 2}));
    CHECK(words[1] == W({1, 2, 1}));
    CHECK(words[2] == W({2, 1, 1}));
}
