#include "zinbiel/expr.hpp"

#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "zinbiel/format.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/zin_ops.hpp"

using namespace zinbiel;

namespace {

ZinElement ev(const std::string& text) {
    EvalContext ctx;
    return eval(parse(text), ctx);
}

Word w(std::vector<GeneratorId> ls) { return Word{std::move(ls)}; }

}  // namespace

TEST_CASE("parser shapes and precedence") {
    CHECK(parse("[x,y]")->kind == ExprKind::Bracket);
    CHECK(parse("{x,y}")->kind == ExprKind::Brace);
    CHECK(parse("bar(a*b*u*v)")->kind == ExprKind::CallBar);

    // a*b*c associates left; * and # share one level.
    ExprPtr t = parse("a*b#c");
    CHECK(t->kind == ExprKind::ShuffleMul);
    CHECK(t->args[0]->kind == ExprKind::ZinMul);

    // additive below multiplicative
    ExprPtr s = parse("x + y*z");
    CHECK(s->kind == ExprKind::Add);
    CHECK(s->args[1]->kind == ExprKind::ZinMul);

    ExprPtr g = parse("(x + y)*z");
    CHECK(g->kind == ExprKind::ZinMul);
    CHECK(g->args[0]->kind == ExprKind::Add);

    ExprPtr n = parse("-x*y");
    CHECK(n->kind == ExprKind::ZinMul);
    CHECK(n->args[0]->kind == ExprKind::Neg);

    CHECK(parse("3/2")->value == make_scalar(3, 2));
    CHECK(parse("6/4")->value == make_scalar(3, 2));
    CHECK(parse("j")->kind == ExprKind::Generator);       // lowercase j is an ordinary name
    CHECK_THROWS_AS(parse("j(x,y,z)"), SyntaxError);      // and cannot be called
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse("3/2 x*y"), SyntaxError);  // juxtaposition is not a product
    CHECK_THROWS_AS(parse("x +"), SyntaxError);
    CHECK_THROWS_AS(parse("[x y]"), SyntaxError);
    CHECK_THROWS_AS(parse("p"), SyntaxError);    // reserved, must be called
    CHECK_THROWS_AS(parse("bar"), SyntaxError);  // reserved, must be called
    CHECK_THROWS_AS(parse("J(x,y)"), SyntaxError);
    CHECK_THROWS_AS(parse("D(x,y)"), SyntaxError);
    CHECK_THROWS_AS(parse("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse("x $ y"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("X"), SyntaxError);  // uppercase names other than D, J

    try {
        parse("3/2 x*y");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("print round-trips to an equal tree") {
    const std::vector<std::string> samples = {
        "x", "3/2", "-x", "--x", "x + y", "x - y - z", "x - (y - z)", "a*b*c", "a*(b*c)",
        "a*b#c", "a#(b*c)", "-(a + b)", "a*-b", "[x,y]", "{x,[y,z]}", "p([x,y])",
        "bar(a*b*u*v)", "D(x*y*z)", "J(x,y,[z,w])", "2*x + 3/2*y", "-(a*b)",
        "[x + y,z]*w", "bar(x*y) - bar(y*x)",
    };
    for (const std::string& s : samples) {
        CAPTURE(s);
        ExprPtr t = parse(s);
        CHECK(expr_equal(parse(print(t)), t));
    }
}

TEST_CASE("evaluation matches direct operations") {
    GeneratorId x = 1, y = 2, z = 3;
    CHECK(ev("x") == ZinElement::from_word(w({x})));
    CHECK(ev("[x,y]") == ZinElement::from_word(w({x, y})) - ZinElement::from_word(w({y, x})));
    CHECK(ev("x*y*z") == zin_mul(zin_mul(ZinElement::from_word(w({x})),
                                         ZinElement::from_word(w({y}))),
                                 ZinElement::from_word(w({z}))));
    CHECK(ev("{x,y}*z") ==
          zin_mul(anticommutator(ZinElement::from_word(w({x})), ZinElement::from_word(w({y}))),
                  ZinElement::from_word(w({z}))));
    CHECK(ev("x#y") == shuffle_words(w({x}), w({y})));
    CHECK(ev("D(x*y*z)") == dynkin(ZinElement::from_word(w({x, y, z}))));
    CHECK(ev("p([x,y])") == p_map(commutator(ZinElement::from_word(w({x})),
                                             ZinElement::from_word(w({y})))));
    CHECK(ev("bar(x*y)") == bar(ZinElement::from_word(w({x, y}))));
    CHECK(ev("J(x,y,z)") == jacobiator(ZinElement::from_word(w({x})),
                                       ZinElement::from_word(w({y})),
                                       ZinElement::from_word(w({z}))));
    CHECK(ev("3/2*x - x").coeff(w({x})) == make_scalar(1, 2));
    CHECK(ev("x*3") == Scalar(3) * ZinElement::from_word(w({x})));
    CHECK(ev("(1/2 + 1/2)*x") == ZinElement::from_word(w({x})));
    CHECK(ev("x - x").is_zero());

    // Ids follow first appearance: in "y*x" the word is (1,2) under y=1, x=2.
    EvalContext ctx;
    CHECK(eval(parse("y*x"), ctx) == ZinElement::from_word(w({1, 2})));
    CHECK(ctx.alphabet.name_of(1) == "y");
    CHECK(ctx.alphabet.name_of(2) == "x");
}

TEST_CASE("evaluation type errors") {
    CHECK_THROWS_AS(ev("3/2"), EvalError);          // bare scalar
    CHECK_THROWS_AS(ev("2 + 2"), EvalError);        // still a scalar
    CHECK_THROWS_AS(ev("x + 3"), EvalError);        // mixed sum
    CHECK_THROWS_AS(ev("3 # x"), EvalError);        // scalar in a shuffle
    CHECK_THROWS_AS(ev("[3,x]"), EvalError);        // scalar in a bracket
    CHECK_THROWS_AS(ev("{x,3}"), EvalError);        // scalar in a brace
    CHECK_THROWS_AS(ev("p(3)"), EvalError);
    CHECK_THROWS_AS(ev("D(1/2)"), EvalError);
    CHECK_THROWS_AS(ev("bar(x)"), DegreeOneSupport);  // propagated from bar

    EvalContext frozen;
    frozen.alphabet = Alphabet({"x", "y"});
    frozen.frozen = true;
    CHECK(eval(parse("[x,y]"), frozen) ==
          commutator(ZinElement::from_word(w({1})), ZinElement::from_word(w({2}))));
    CHECK_THROWS_AS(eval(parse("z"), frozen), EvalError);
}

TEST_CASE("random round trip through print and re-eval") {
    // Random trees built from the grammar evaluate identically after a
    // print/parse round trip.
    SplitMix64 rng(314);
    for (int trial = 0; trial < 40; ++trial) {
        ZinElement f = random_element(rng, 3, 4, 4, 5);
        // Render f through the expression language: sum of coeff*word products.
        std::string text;
        Alphabet names = Alphabet::default_letters(3);
        for (const auto& [word, c] : f.terms()) {
            std::string mono;
            for (std::size_t i = 0; i < word.letters.size(); ++i) {
                if (i) mono += '*';
                mono += names.name_of(word.letters[i]);
            }
            std::string piece = c.get_str();
            if (!text.empty()) text += " + ";
            text += piece.front() == '-' ? "-" + piece.substr(1) + "*" + mono
                                         : piece + "*" + mono;
        }
        if (text.empty()) continue;
        EvalContext ctx;
        ctx.alphabet = names;
        ctx.frozen = true;
        ZinElement back = eval(parse(text), ctx);
        // Left-assoc letter products are exactly the left-normed words.
        CHECK(back == f);
        ExprPtr tree = parse(text);
        CHECK(expr_equal(parse(print(tree)), tree));
    }
}

TEST_CASE("element and bracket-monomial formatting") {
    Alphabet names({"x", "y"});
    CHECK(format_element(ZinElement(), names) == "0");
    CHECK(format_element(ev("x"), names) == "+1/1 x");
    CHECK(format_element(ev("[x,y]"), names) == "+1/1 x.y\n-1/1 y.x");
    CHECK(format_element(ev("3/2*(x*x*y)"), names) == "+3/2 x.x.y");
    CHECK(format_word(w({1, 2, 1}), names) == "x.y.x");
    CHECK(format_scalar(make_scalar(-3, 2)) == "-3/2");
    CHECK(format_scalar(Scalar(7)) == "7");

    MultiDegree d;
    d.counts = {{1, 1}, {2, 2}};
    CHECK(format_multidegree(d, names) == "x:1 y:2");

    AcMono leaf_x = ac_leaf(1);
    AcMono m = ac_node(ac_node(leaf_x, ac_leaf(2)), ac_leaf(3));
    Alphabet abc = Alphabet::default_letters(3);
    CHECK(format_ac_mono(m, abc) == "[[a,b],c]");
    AcElement e;
    e.add(m, make_scalar(-1, 2));
    CHECK(format_ac_element(e, abc) == "-1/2 [[a,b],c]");
    CHECK(format_ac_element(AcElement(), abc) == "0");
}

TEST_CASE("reports render stably in text and json") {
    Report r("demo");
    r.field("seed", "42");
    r.field("element", "+1/1 x.y\n-1/1 y.x");
    r.check_equal("rank", "3", "3");
    r.check("residual is zero", "0", "0", true);
    CHECK(r.all_pass());
    CHECK(r.to_text() ==
          "== demo ==\n"
          "seed: 42\n"
          "element:\n"
          "  +1/1 x.y\n"
          "  -1/1 y.x\n"
          "[PASS] rank: expected 3, computed 3\n"
          "[PASS] residual is zero: expected 0, computed 0\n"
          "result: PASS (2/2 checks)\n");
    CHECK(r.to_text() == r.to_text());
    CHECK(r.to_json().find("\"result\": \"PASS\"") != std::string::npos);

    Report f("demo");
    f.check_equal("rank", "3", "4");
    CHECK_FALSE(f.all_pass());
    CHECK(f.to_text().find("[FAIL] rank: expected 3, computed 4") != std::string::npos);
    CHECK(f.to_json().find("\"result\": \"FAIL\"") != std::string::npos);
}
