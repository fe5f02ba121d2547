#include <doctest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "zinbiel/criteria.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/tortkara.hpp"

using namespace zinbiel;

namespace {

Word W(std::initializer_list<GeneratorId> ls) { return Word{std::vector<GeneratorId>(ls)}; }
ZinElement E(std::initializer_list<GeneratorId> ls) { return ZinElement::from_word(W(ls)); }

using Code = std::vector<std::int32_t>;

std::size_t tree_end(const Code& code, std::size_t pos) {
    if (code[pos] > 0) return pos + 1;
    return tree_end(code, tree_end(code, pos + 1));
}

// Swaps the two children of the internal node starting at `node`.
Code swap_children_at(const Code& code, std::size_t node) {
    const std::size_t l0 = node + 1;
    const std::size_t l1 = tree_end(code, l0);
    const std::size_t r1 = tree_end(code, l1);
    Code out(code.begin(), code.begin() + node + 1);
    out.insert(out.end(), code.begin() + l1, code.begin() + r1);
    out.insert(out.end(), code.begin() + l0, code.begin() + l1);
    out.insert(out.end(), code.begin() + r1, code.end());
    return out;
}

// Every tree shape with k leaves; leaves hold the placeholder label 1.
std::vector<Code> tree_shapes(int k) {
    if (k == 1) return {Code{1}};
    std::vector<Code> out;
    for (int lk = 1; lk < k; ++lk) {
        const auto ls = tree_shapes(lk);
        const auto rs = tree_shapes(k - lk);
        for (const Code& l : ls)
            for (const Code& r : rs) {
                Code c{0};
                c.insert(c.end(), l.begin(), l.end());
                c.insert(c.end(), r.begin(), r.end());
                out.push_back(std::move(c));
            }
    }
    return out;
}

// All leaf labelings of the shape from 1..num_labels.
std::vector<Code> labelings(const Code& shape, int num_labels) {
    std::vector<std::size_t> leaf_pos;
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (shape[i] > 0) leaf_pos.push_back(i);
    std::vector<Code> out;
    std::vector<int> pick(leaf_pos.size(), 1);
    while (true) {
        Code c = shape;
        for (std::size_t i = 0; i < leaf_pos.size(); ++i) c[leaf_pos[i]] = pick[i];
        out.push_back(std::move(c));
        int i = static_cast<int>(pick.size()) - 1;
        while (i >= 0 && ++pick[i] > num_labels) pick[i--] = 1;
        if (i < 0) break;
    }
    return out;
}

std::map<GeneratorId, ZinElement> identity_assignment(int n) {
    std::map<GeneratorId, ZinElement> a;
    for (int i = 1; i <= n; ++i)
        a.emplace(i, ZinElement::from_word(Word{{static_cast<GeneratorId>(i)}}));
    return a;
}

}  // namespace

TEST_CASE("canonicalization worked examples") {
    // (y.x) -> -(x.y)
    auto m = ac_canonicalize(ac_node(ac_leaf(2), ac_leaf(1)));
    REQUIRE(m.has_value());
    CHECK(m->code == Code{0, 1, 2});
    CHECK(m->sign == -1);

    // (x.x) vanishes
    CHECK_FALSE(ac_canonicalize(ac_node(ac_leaf(1), ac_leaf(1))).has_value());

    // ((z.y).x) = [x,[y,z]] with positive sign: two swaps cancel
    auto t = ac_canonicalize(ac_node(ac_node(ac_leaf(3), ac_leaf(2)), ac_leaf(1)));
    REQUIRE(t.has_value());
    CHECK(t->code == Code{0, 1, 0, 2, 3});
    CHECK(t->sign == 1);

    // canonical input is a fixed point
    auto again = ac_canonicalize(*t);
    REQUIRE(again.has_value());
    CHECK(*again == *t);

    CHECK_THROWS_AS(ac_canonicalize(AcMono{{0, 1}, 1}), ZinError);
    CHECK_THROWS_AS(ac_canonicalize(AcMono{{}, 1}), ZinError);
}

TEST_CASE("canonical form is swap-invariant up to sign") {
    for (int k = 2; k <= 4; ++k)
        for (const Code& shape : tree_shapes(k))
            for (const Code& code : labelings(shape, 3)) {
                const auto base = ac_canonicalize(AcMono{code, 1});
                for (std::size_t p = 0; p < code.size(); ++p) {
                    if (code[p] != 0) continue;
                    const auto swapped = ac_canonicalize(AcMono{swap_children_at(code, p), 1});
                    if (base.has_value()) {
                        REQUIRE(swapped.has_value());
                        CHECK(swapped->code == base->code);
                        CHECK(swapped->sign == -base->sign);
                    } else {
                        CHECK_FALSE(swapped.has_value());
                    }
                }
            }
}

TEST_CASE("canonicalization commutes with commutator evaluation") {
    const auto assign = identity_assignment(3);
    for (int k = 2; k <= 4; ++k)
        for (const Code& shape : tree_shapes(k))
            for (const Code& code : labelings(shape, 3)) {
                const ZinElement direct = eval_ac(AcMono{code, 1}, assign);
                const auto canon = ac_canonicalize(AcMono{code, 1});
                if (canon.has_value())
                    CHECK(direct == eval_ac(*canon, assign));
                else
                    CHECK(direct.is_zero());
            }
}

TEST_CASE("eval_ac base cases") {
    const auto assign = identity_assignment(3);
    CHECK(eval_ac(ac_leaf(2), assign) == E({2}));
    CHECK(eval_ac(ac_node(ac_leaf(1), ac_leaf(2)), assign) == E({1, 2}) - E({2, 1}));
    ZinElement nested = commutator(commutator(E({1}), E({2})), E({3}));
    CHECK(eval_ac(ac_node(ac_node(ac_leaf(1), ac_leaf(2)), ac_leaf(3)), assign) == nested);
    // sign scales the evaluation
    CHECK(eval_ac(AcMono{{0, 1, 2}, -1}, assign) == -(E({1, 2}) - E({2, 1})));
    CHECK_THROWS_AS(eval_ac(ac_leaf(9), assign), UnassignedLeaf);
}

TEST_CASE("jacobiator structure") {
    const ZinElement x = E({1}), y = E({2}), z = E({3});
    // repeated argument kills it
    CHECK(jacobiator(x, x, y).is_zero());
    CHECK(jacobiator(x, y, x).is_zero());
    // cyclic invariance and antisymmetry in adjacent arguments
    CHECK(jacobiator(x, y, z) == jacobiator(y, z, x));
    CHECK(jacobiator(x, y, z) == -jacobiator(y, x, z));
    CHECK(jacobiator(x, y, ZinElement{}).is_zero());
    // expansion agrees with the commutator definition
    CHECK(jacobiator(x, y, z) == commutator(commutator(x, y), z) +
                                     commutator(commutator(y, z), x) +
                                     commutator(commutator(z, x), y));
}

TEST_CASE("defining identity residuals vanish on generator quadruples") {
    std::vector<ZinElement> gens;
    for (GeneratorId g = 1; g <= 4; ++g) gens.push_back(E({g}));
    for (const ZinElement& a : gens)
        for (const ZinElement& b : gens)
            for (const ZinElement& c : gens)
                for (const ZinElement& d : gens) {
                    auto [r2, r3] = verify_tortkara(a, b, c, d);
                    CHECK(r2.is_zero());
                    CHECK(r3.is_zero());
                    CHECK(degree4_relation_check(a, b, c, d).is_zero());
                }
}

TEST_CASE("defining identity residuals vanish on random elements") {
    SplitMix64 rng(0x165667b1u);
    for (int t = 0; t < 12; ++t) {
        ZinElement a = random_element(rng, 3, 2, 2, 3);
        ZinElement b = random_element(rng, 3, 2, 2, 3);
        ZinElement c = random_element(rng, 3, 2, 2, 3);
        ZinElement d = random_element(rng, 3, 2, 2, 3);
        auto [r2, r3] = verify_tortkara(a, b, c, d);
        CHECK(r2.is_zero());
        CHECK(r3.is_zero());
        CHECK(degree4_relation_check(a, b, c, d).is_zero());
    }
    // a few degree-3 monomial quadruples for the deeper expansion
    for (int t = 0; t < 4; ++t) {
        ZinElement a = ZinElement::from_word(random_word(rng, 3, 3, 3));
        ZinElement b = ZinElement::from_word(random_word(rng, 3, 2, 3));
        ZinElement c = ZinElement::from_word(random_word(rng, 3, 1, 2));
        ZinElement d = ZinElement::from_word(random_word(rng, 3, 1, 2));
        auto [r2, r3] = verify_tortkara(a, b, c, d);
        CHECK(r2.is_zero());
        CHECK(r3.is_zero());
        CHECK(degree4_relation_check(a, b, c, d).is_zero());
    }
}

TEST_CASE("multilinear monomial basis counts and small cases") {
    CHECK(multilinear_ac_basis(1).size() == 1);
    auto b2 = multilinear_ac_basis(2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].code == Code{0, 1, 2});

    auto b3 = multilinear_ac_basis(3);
    REQUIRE(b3.size() == 3);
    CHECK(b3[0].code == Code{0, 0, 1, 2, 3});
    CHECK(b3[1].code == Code{0, 0, 1, 3, 2});
    CHECK(b3[2].code == Code{0, 1, 0, 2, 3});

    for (int n = 2; n <= 6; ++n) {
        const auto basis = multilinear_ac_basis(n);
        CHECK(Integer(static_cast<long>(basis.size())) == double_factorial_odd(2 * n - 3));
        // every listed monomial is canonical and signless
        for (const AcMono& m : basis) {
            CHECK(m.sign == 1);
            auto c = ac_canonicalize(m);
            REQUIRE(c.has_value());
            CHECK(*c == m);
        }
    }
    CHECK_THROWS_AS(multilinear_ac_basis(0), DegreeTooSmall);
}

TEST_CASE("basis equals deduplicated canonicalization of all labeled trees") {
    for (int n = 2; n <= 5; ++n) {
        std::set<Code> seen;
        std::vector<GeneratorId> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        for (const Code& shape : tree_shapes(n)) {
            std::vector<std::size_t> leaf_pos;
            for (std::size_t i = 0; i < shape.size(); ++i)
                if (shape[i] > 0) leaf_pos.push_back(i);
            std::sort(perm.begin(), perm.end());
            do {
                Code code = shape;
                for (std::size_t i = 0; i < leaf_pos.size(); ++i) code[leaf_pos[i]] = perm[i];
                auto canon = ac_canonicalize(AcMono{code, 1});
                REQUIRE(canon.has_value());  // distinct labels never collapse
                seen.insert(canon->code);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::set<Code> listed;
        for (const AcMono& m : multilinear_ac_basis(n)) listed.insert(m.code);
        CHECK(seen == listed);
    }
}

TEST_CASE("consequence span at the base degree") {
    ConsequenceSpan cs = tortkara_consequence_span(4);
    CHECK(cs.coords.dimension() == 15);
    CHECK(cs.span.rank() == 3);

    // the identity substituted with the four variables lies in the span
    AcElement a = ac_mono_element(ac_leaf(1)), b = ac_mono_element(ac_leaf(2));
    AcElement c = ac_mono_element(ac_leaf(3)), d = ac_mono_element(ac_leaf(4));
    AcElement inst = ac_sub(
        ac_add(ac_mul(ac_mul(a, b), ac_mul(c, d)), ac_mul(ac_mul(a, d), ac_mul(c, b))),
        ac_add(ac_mul(ac_jacobiator(a, b, c), d), ac_mul(ac_jacobiator(a, d, c), b)));
    CHECK_FALSE(inst.is_zero());
    std::vector<std::pair<AcMono, Scalar>> terms(inst.terms.begin(), inst.terms.end());
    CHECK(cs.span.contains(cs.coords.row(terms)));
    // and evaluates to zero through the commutator
    CHECK(eval_ac_element(inst, identity_assignment(4)).is_zero());

    CHECK_THROWS_AS(tortkara_consequence_span(3), DegreeTooSmall);
}

TEST_CASE("free multilinear dimensions match the skew dimensions") {
    CHECK(free_tortkara_multilinear_dim(2) == 1);
    CHECK(free_tortkara_multilinear_dim(3) == 3);
    CHECK(free_tortkara_multilinear_dim(4) == 12);
    CHECK(free_tortkara_multilinear_dim(5) == 60);
    CHECK(tortkara_consequence_span(5).span.rank() == 45);
    CHECK_THROWS_AS(free_tortkara_multilinear_dim(1), DegreeTooSmall);
}

TEST_CASE("identity survey finds no candidates at small degrees") {
    for (int n : {3, 4, 5}) {
        ScanReport r = s_identity_scan(n);
        CHECK(r.n == n);
        CHECK(r.ambient_dim == double_factorial_odd(2 * n - 3));
        CHECK(r.quotient_dim == r.special_dim);
        CHECK(r.special_dim == factorial(n) / 2);
        CHECK(r.kernel.empty());
    }
    ScanReport r4 = s_identity_scan(4);
    CHECK(r4.ambient_dim == 15);
    CHECK(r4.consequence_rank == 3);
    CHECK(r4.quotient_dim == 12);
}

TEST_CASE("left-normed evaluations have full rank") {
    CHECK(left_normed_rank(2) == 1);
    CHECK(left_normed_rank(3) == 2);
    CHECK(left_normed_rank(7) == 32);
    for (int n = 2; n <= 8; ++n) {
        CHECK(left_normed_rank(n) == (1 << (n - 2)));
        // the skew component over two generators has the same total dimension
        Integer skew_total = 0;
        for (int k = 1; k < n; ++k) {
            MultiDegree d;
            d.counts[1] = k;
            d.counts[2] = n - k;
            skew_total += dim_st(d);
        }
        CHECK(skew_total == Integer(1 << (n - 2)));
    }
    CHECK_THROWS_AS(left_normed_rank(1), DegreeTooSmall);
}
