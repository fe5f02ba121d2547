#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zinbiel/analytic.hpp"
#include "zinbiel/criteria.hpp"
#include "zinbiel/expr.hpp"
#include "zinbiel/format.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/speciality.hpp"
#include "zinbiel/tortkara.hpp"
#include "zinbiel/zin_ops.hpp"

using namespace zinbiel;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::string alphabet_csv;
};

bool want_json(const GlobalOpts& g) { return g.format == "json"; }

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool valid_generator_name(const std::string& n) {
    if (n.empty() || n[0] < 'a' || n[0] > 'z') return false;
    for (char c : n)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return n != "p" && n != "bar";
}

std::vector<std::string> declared_alphabet(const GlobalOpts& g) {
    std::vector<std::string> names = split_csv(g.alphabet_csv);
    for (const std::string& n : names)
        if (!valid_generator_name(n))
            throw EvalError("invalid generator name '" + n + "' in --alphabet");
    return names;
}

// Display names for ids 1..q: the declared alphabet when given, else a..z.
Alphabet alphabet_for(std::size_t q, const GlobalOpts& g) {
    if (!g.alphabet_csv.empty()) {
        std::vector<std::string> names = declared_alphabet(g);
        if (names.size() < q)
            throw EvalError("--alphabet declares " + std::to_string(names.size()) +
                            " names but " + std::to_string(q) + " are needed");
        return Alphabet(names);
    }
    if (q > 26)
        throw EvalError("more than 26 generators; declare names with --alphabet");
    return Alphabet::default_letters(q);
}

EvalContext context_for(const GlobalOpts& g) {
    EvalContext ctx;
    if (!g.alphabet_csv.empty()) {
        ctx.alphabet = Alphabet(declared_alphabet(g));
        ctx.frozen = true;
    }
    return ctx;
}

MultiDegree md_from_csv(const std::string& csv, std::size_t& q) {
    std::vector<std::string> parts = split_csv(csv);
    q = parts.size();
    MultiDegree d;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::size_t used = 0;
        int m = 0;
        try {
            m = std::stoi(parts[i], &used);
        } catch (const std::exception&) {
            throw EvalError("invalid multidegree entry '" + parts[i] + "'");
        }
        if (used != parts[i].size() || m < 0)
            throw EvalError("invalid multidegree entry '" + parts[i] + "'");
        if (m > 0) d.counts[static_cast<GeneratorId>(i + 1)] = m;
    }
    if (d.counts.empty()) throw EvalError("multidegree has no positive entries");
    return d;
}

std::string format_trunc_poly(const TruncPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Scalar c = p.coeff(k);
        if (c == 0) continue;
        Scalar a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
        if (k == 0)
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + " " + mono;
    }
    return out;
}

void emit(const Report& r, const GlobalOpts& g) {
    std::cout << (want_json(g) ? r.to_json() : r.to_text());
}

std::string count_str(int failures) { return std::to_string(failures); }

// ---- subcommand bodies ----

int run_eval(const std::string& text, const GlobalOpts& g) {
    EvalContext ctx = context_for(g);
    ExprPtr tree = parse(text);
    ZinElement f = eval(tree, ctx);
    if (want_json(g)) {
        Report r("eval");
        r.field("expression", print(tree));
        r.field("element", format_element(f, ctx.alphabet));
        emit(r, g);
    } else {
        std::cout << format_element(f, ctx.alphabet) << "\n";
    }
    return 0;
}

int run_is(const std::string& which, const std::string& text, const GlobalOpts& g) {
    EvalContext ctx = context_for(g);
    ExprPtr tree = parse(text);
    ZinElement f = eval(tree, ctx);
    const bool lie = which == "is-lie";
    bool verdict = lie ? is_lie(f) : is_jordan(f);
    Report r(which);
    r.field("expression", print(tree));
    r.field("element", format_element(f, ctx.alphabet));
    r.check(lie ? "the involution criterion p(f) = -f" : "the symmetrization criterion D(f) = n!f",
            "true", verdict ? "true" : "false", verdict);
    emit(r, g);
    return verdict ? 0 : 1;
}

int run_skew_basis(const std::string& mdcsv, const GlobalOpts& g) {
    std::size_t q = 0;
    MultiDegree d = md_from_csv(mdcsv, q);
    Alphabet names = alphabet_for(q, g);
    std::vector<Word> basis = enumerate_skew_basis(d);
    if (want_json(g)) {
        Report r("skew-basis");
        r.field("multidegree", format_multidegree(d, names));
        r.field("size", std::to_string(basis.size()));
        std::string lines;
        for (const Word& w : basis) {
            if (!lines.empty()) lines += '\n';
            lines += "bar(" + format_word(w, names) + ")";
        }
        r.field("basis", lines.empty() ? "0" : lines);
        emit(r, g);
    } else {
        if (basis.empty()) std::cout << "0\n";
        for (const Word& w : basis) std::cout << "bar(" << format_word(w, names) << ")\n";
    }
    return 0;
}

int run_dim_st(const std::string& mdcsv, const GlobalOpts& g) {
    std::size_t q = 0;
    MultiDegree d = md_from_csv(mdcsv, q);
    Integer dim = dim_st(d);
    if (want_json(g)) {
        Alphabet names = alphabet_for(q, g);
        Report r("dim-st");
        r.field("multidegree", format_multidegree(d, names));
        r.field("value", dim.get_str());
        emit(r, g);
    } else {
        std::cout << dim.get_str() << "\n";
    }
    return 0;
}

ZinElement cheap_element(SplitMix64& rng, int gens) {
    // Distribution tuned so nested products stay affordable: mostly 2-term
    // degree <= 2 elements, occasionally a degree-3 monomial.
    if (rng.below(8) == 0)
        return ZinElement::from_word(random_word(rng, gens, 3, 3), random_nonzero_coeff(rng, 3));
    return random_element(rng, gens, 2, 2, 3);
}

std::vector<Word> all_words(int gens, int len) {
    std::vector<Word> out;
    std::vector<GeneratorId> cur(static_cast<std::size_t>(len), 1);
    while (true) {
        out.push_back(Word{cur});
        int i = len - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == gens) {
            cur[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

// Random full commutator tree on random letters; always a Lie element.
ZinElement random_lie(SplitMix64& rng, int gens, int leaves) {
    if (leaves == 1)
        return ZinElement::from_word(
            Word{{static_cast<GeneratorId>(1 + rng.below(static_cast<std::uint64_t>(gens)))}});
    int left = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(leaves - 1)));
    ZinElement l = random_lie(rng, gens, left);
    ZinElement r = random_lie(rng, gens, leaves - left);
    return commutator(l, r);
}

int run_verify_core(int max_degree, int trials, std::uint64_t seed, const GlobalOpts& g) {
    Report r("verify core");
    r.field("max-degree", std::to_string(max_degree));
    r.field("trials", std::to_string(trials));
    r.field("seed", std::to_string(seed));
    SplitMix64 rng(seed);

    int defining = 0;
    for (int t = 0; t < trials; ++t) {
        ZinElement a = random_element(rng, 3, max_degree, 3, 4);
        ZinElement b = random_element(rng, 3, max_degree, 3, 4);
        ZinElement c = random_element(rng, 3, max_degree, 3, 4);
        ZinElement resid = zin_mul(a, zin_mul(b, c)) -
                           zin_mul(zin_mul(a, b) + zin_mul(b, a), c);
        if (!resid.is_zero()) ++defining;
    }
    r.check("defining identity a(bc) = (ab+ba)c, failures", "0", count_str(defining),
            defining == 0);

    int sh_comm = 0, sh_assoc = 0, reduction = 0, recursion = 0;
    for (int t = 0; t < trials; ++t) {
        Word u = random_word(rng, 3, 1, std::max(1, max_degree - 1));
        Word v = random_word(rng, 3, 1, std::max(1, max_degree - 1));
        Word w = random_word(rng, 3, 1, 2);
        if (shuffle_words(u, v) != shuffle_words(v, u)) ++sh_comm;
        ZinElement eu = ZinElement::from_word(u), ev = ZinElement::from_word(v),
                   ew = ZinElement::from_word(w);
        if (shuffle_mul(shuffle_mul(eu, ev), ew) != shuffle_mul(eu, shuffle_mul(ev, ew)))
            ++sh_assoc;
        // u o v = (u sh v-minus-last) o last for |v| > 1
        if (v.length() > 1) {
            Word head{std::vector<GeneratorId>(v.letters.begin(), v.letters.end() - 1)};
            ZinElement rhs = append_letter(shuffle_words(u, head), v.letters.back());
            if (word_zinbiel_mul(u, v) != rhs) ++reduction;
        }
        // u sh v = (u-minus-last sh v) o u_last + (u sh v-minus-last) o v_last
        if (u.length() > 1 && v.length() > 1) {
            Word uh{std::vector<GeneratorId>(u.letters.begin(), u.letters.end() - 1)};
            Word vh{std::vector<GeneratorId>(v.letters.begin(), v.letters.end() - 1)};
            ZinElement rhs = append_letter(shuffle_words(uh, v), u.letters.back()) +
                             append_letter(shuffle_words(u, vh), v.letters.back());
            if (shuffle_words(u, v) != rhs) ++recursion;
        }
    }
    r.check("shuffle commutativity, failures", "0", count_str(sh_comm), sh_comm == 0);
    r.check("shuffle associativity, failures", "0", count_str(sh_assoc), sh_assoc == 0);
    r.check("zinbiel product reduces to a shuffle, failures", "0", count_str(reduction),
            reduction == 0);
    r.check("shuffle peeling recursion, failures", "0", count_str(recursion), recursion == 0);

    int square = 0, linearized = 0, degree4 = 0;
    for (int t = 0; t < trials; ++t) {
        ZinElement a = cheap_element(rng, 3), b = cheap_element(rng, 3);
        ZinElement c = cheap_element(rng, 3), d = cheap_element(rng, 3);
        auto [r2, r3] = verify_tortkara(a, b, c, d);
        if (!r2.is_zero()) ++square;
        if (!r3.is_zero()) ++linearized;
        if (!degree4_relation_check(a, b, c, d).is_zero()) ++degree4;
    }
    r.check("bracket square identity (ab)(cb) = J(a,b,c)b, failures", "0", count_str(square),
            square == 0);
    r.check("bracket linearized identity, failures", "0", count_str(linearized),
            linearized == 0);
    r.check("degree-4 bracket product relation, failures", "0", count_str(degree4),
            degree4 == 0);

    // Rewrite rules for products of skew elements, swept exhaustively in
    // small degree against direct computation.
    const int sweep = std::min(max_degree, 6);
    int two_tail = 0, letter_bracket = 0, skew_bracket = 0;
    std::vector<Word> skews;
    for (int len = 2; len <= sweep - 1; ++len)
        for (const Word& w : all_words(3, len))
            if (w.letters[len - 2] < w.letters[len - 1]) skews.push_back(w);
    for (const Word& u : skews) {
        for (GeneratorId gg = 1; gg <= 3; ++gg) {
            if (static_cast<int>(u.length()) + 1 > sweep) continue;
            ZinElement direct = commutator(bar(ZinElement::from_word(u)),
                                           ZinElement::from_word(Word{{gg}}));
            if (lemma34_rhs(u, gg) != direct) ++letter_bracket;
        }
        for (const Word& v : skews) {
            if (static_cast<int>(u.length() + v.length()) > sweep) continue;
            ZinElement bu = bar(ZinElement::from_word(u)), bv = bar(ZinElement::from_word(v));
            if (lemma33_rhs(u, v) != zin_mul(bu, bv)) ++two_tail;
            bool both2 = u.length() == 2 && v.length() == 2;
            bool both3 = u.length() >= 3 && v.length() >= 3;
            if ((both2 || both3) && lemma35_rhs(u, v) != commutator(bu, bv)) ++skew_bracket;
        }
    }
    r.check("skew product rewrite, failures", "0", count_str(two_tail), two_tail == 0);
    r.check("skew bracket with a letter rewrite, failures", "0", count_str(letter_bracket),
            letter_bracket == 0);
    r.check("skew bracket rewrite, failures", "0", count_str(skew_bracket), skew_bracket == 0);

    int closure = 0;
    for (int t = 0; t < trials; ++t) {
        ZinElement a = random_element(rng, 3, 3, 2, 3);
        ZinElement b = random_lie(rng, 3, 1 + static_cast<int>(rng.below(3)));
        ZinElement c = random_lie(rng, 3, 1 + static_cast<int>(rng.below(3)));
        if (!corollary23_check(a, b, c)) ++closure;
    }
    r.check("products against Lie pairs stay Lie, failures", "0", count_str(closure),
            closure == 0);

    emit(r, g);
    return r.all_pass() ? 0 : 1;
}

int run_tortkara_mdim(int n, const GlobalOpts& g) {
    Integer dim = free_tortkara_multilinear_dim(n);
    if (want_json(g)) {
        Report r("tortkara mdim");
        r.field("n", std::to_string(n));
        r.field("value", dim.get_str());
        emit(r, g);
    } else {
        std::cout << dim.get_str() << "\n";
    }
    return 0;
}

int run_tortkara_scan(int n, const GlobalOpts& g) {
    ScanReport s = s_identity_scan(n);
    Alphabet names = alphabet_for(static_cast<std::size_t>(n), g);
    Report r("tortkara scan");
    r.field("n", std::to_string(n));
    r.field("multilinear monomials", s.ambient_dim.get_str());
    r.field("relation-span rank", s.consequence_rank.get_str());
    r.field("quotient dimension", s.quotient_dim.get_str());
    r.field("embedded-image dimension", s.special_dim.get_str());
    r.check_equal("quotient matches the embedded image", s.special_dim.get_str(),
                  s.quotient_dim.get_str());
    r.check_equal("kernel of the embedding is empty", "0", std::to_string(s.kernel.size()));
    if (!s.kernel.empty()) {
        std::string lines;
        for (const AcElement& e : s.kernel) {
            if (!lines.empty()) lines += "\n----\n";
            lines += format_ac_element(e, names);
        }
        r.field("kernel elements", lines);
    }
    emit(r, g);
    return r.all_pass() ? 0 : 1;
}

int run_tortkara_two_gen(int max_degree, const GlobalOpts& g) {
    Report r("tortkara two-gen");
    r.field("max-degree", std::to_string(max_degree));
    for (int n = 2; n <= max_degree; ++n) {
        Integer expected = 1;
        expected <<= (n - 2);
        r.check_equal("independent left-normed brackets at degree " + std::to_string(n),
                      expected.get_str(), std::to_string(left_normed_rank(n)));
    }
    emit(r, g);
    return r.all_pass() ? 0 : 1;
}

void enumerate_multidegrees(std::size_t q, int total, std::size_t at, MultiDegree& cur,
                            std::vector<MultiDegree>& out) {
    if (at + 1 == q) {
        if (total > 0) cur.counts[static_cast<GeneratorId>(at + 1)] = total;
        out.push_back(cur);
        cur.counts.erase(static_cast<GeneratorId>(at + 1));
        return;
    }
    for (int m = 0; m <= total; ++m) {
        if (m > 0) cur.counts[static_cast<GeneratorId>(at + 1)] = m;
        enumerate_multidegrees(q, total - m, at + 1, cur, out);
        cur.counts.erase(static_cast<GeneratorId>(at + 1));
    }
}

int run_cohn(const std::string& path, int max_total, const GlobalOpts& g) {
    std::ifstream in(path);
    if (!in) throw ZinError("cannot open generators file '" + path + "'");
    EvalContext ctx = context_for(g);
    std::vector<ZinElement> gens;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t cut = line.find(';');
        if (cut != std::string::npos) line = line.substr(0, cut);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        gens.push_back(eval(parse(line.substr(a, b - a + 1)), ctx));
    }
    if (gens.empty()) throw ZinError("generators file '" + path + "' declares no elements");
    IdealPresentation pres = make_presentation(gens, ctx.alphabet, path);

    Report r("speciality cohn");
    r.field("generators-file", path);
    std::string shown;
    for (const ZinElement& e : gens) {
        if (!shown.empty()) shown += "\n----\n";
        shown += format_element(e, ctx.alphabet);
    }
    r.field("ideal generators", shown);
    r.field("max-total", std::to_string(max_total));

    const std::size_t q = ctx.alphabet.size();
    bool witness_shown = false;
    for (int total = 2; total <= max_total; ++total) {
        std::vector<MultiDegree> mds;
        MultiDegree cur;
        enumerate_multidegrees(q, total, 0, cur, mds);
        std::string bad;
        for (const MultiDegree& d : mds) {
            if (d.total() != total) continue;
            CohnVerdict v = cohn_check(pres, d);
            if (!v.holds) {
                bad = format_multidegree(d, ctx.alphabet);
                if (v.witness && !witness_shown) {
                    r.field("witness outside the bracket ideal at " + bad,
                            format_element(*v.witness, ctx.alphabet));
                    witness_shown = true;
                }
                break;
            }
        }
        r.check("inclusion at total degree " + std::to_string(total), "holds",
                bad.empty() ? "holds" : "fails at " + bad, bad.empty());
    }
    emit(r, g);
    return r.all_pass() ? 0 : 1;
}

int run_counterexample(const GlobalOpts& g) {
    CounterexampleReport c = counterexample_certificate();
    Alphabet names({"x", "y", "z"});
    Report r("speciality counterexample");
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        r.field("g" + std::to_string(i + 1), format_element(c.generators[i], names));
    r.field("w", format_element(c.w, names));
    r.field("at", format_multidegree(c.at, names));
    r.check("w equals x*g1 - y*g2 + z*g3", "true", c.combination_matches ? "true" : "false",
            c.combination_matches);
    r.check("w lies in the bracket subalgebra", "true", c.w_is_skew ? "true" : "false",
            c.w_is_skew);
    r.check("w is not a combination of [x,g1], [y,g2], [z,g3]", "true",
            c.unsolvable ? "true" : "false", c.unsolvable);
    r.check("span rank grows when w is adjoined",
            std::to_string(c.bracket_rank) + " -> " + std::to_string(c.bracket_rank + 1),
            std::to_string(c.bracket_rank) + " -> " + std::to_string(c.extended_rank),
            c.extended_rank == c.bracket_rank + 1);
    r.check("inclusion test fails at " + format_multidegree(c.at, names), "fails",
            c.cohn_fails ? "fails" : "holds", c.cohn_fails);
    emit(r, g);
    return r.all_pass() ? 0 : 1;
}

int run_remark1(int cap, int trials, std::uint64_t seed, const GlobalOpts& g) {
    Remark1Report rep = check_remark1(cap, trials, seed);
    Report r("remark1");
    r.field("cap", std::to_string(rep.cap));
    r.field("trials", std::to_string(rep.trials));
    r.field("seed", std::to_string(rep.seed));
    r.field("triple-degree", std::to_string(rep.triple_degree));
    r.field("quadruple-degree", std::to_string(rep.quadruple_degree));
    r.field("1 * (1 * 1)", format_trunc_poly(rep.star_nested));
    r.field("(1 * 1 + 1 * 1) * 1", format_trunc_poly(rep.star_split));
    r.field("commutator [1, x]", format_trunc_poly(rep.bracket_one_x));
    r.check("right-Zinbiel identity for the corrected product, failures", "0",
            count_str(rep.diamond_zinbiel_failures), rep.diamond_zinbiel_failures == 0);
    r.check("uncorrected product breaks right-Zinbiel at constants", "distinct values",
            rep.star_witness_differs ? "distinct values" : "equal values",
            rep.star_witness_differs);
    r.check("both products share one commutator, failures", "0",
            count_str(rep.commutator_agreement_failures),
            rep.commutator_agreement_failures == 0);
    r.check_equal("commutator worked value [1, x]", "1/3 x^3",
                  format_trunc_poly(rep.bracket_one_x));
    r.check("left-commutativity a*(b*c) = b*(a*c), failures", "0",
            count_str(rep.star_left_commutative_failures),
            rep.star_left_commutative_failures == 0);
    r.check("associator cycle identity, failures", "0",
            count_str(rep.star_associator_cycle_failures),
            rep.star_associator_cycle_failures == 0);
    r.check("bracket identities of the commutator algebra, failures", "0",
            count_str(rep.tortkara_residual_failures), rep.tortkara_residual_failures == 0);
    emit(r, g);
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"exact calculator for the free right-Zinbiel algebra and its bracket structures"};
    app.require_subcommand(1);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--alphabet", g.alphabet_csv,
                   "comma-separated generator names fixing id order");

    std::string expr_text, mdcsv, gens_path;
    int n = 4, max_degree = 6, max_total = 6, trials = 100, cap = 12;
    std::uint64_t seed = 1;
    int exit_code = 0;

    auto* c_eval = app.add_subcommand("eval", "evaluate an expression to canonical form");
    c_eval->add_option("expr", expr_text, "expression")->required();
    c_eval->callback([&] { exit_code = run_eval(expr_text, g); });

    auto* c_islie = app.add_subcommand("is-lie", "test whether an element lies in the bracket subalgebra");
    c_islie->add_option("expr", expr_text, "expression")->required();
    c_islie->callback([&] { exit_code = run_is("is-lie", expr_text, g); });

    auto* c_isjordan = app.add_subcommand("is-jordan", "test whether an element lies in the symmetrized subalgebra");
    c_isjordan->add_option("expr", expr_text, "expression")->required();
    c_isjordan->callback([&] { exit_code = run_is("is-jordan", expr_text, g); });

    auto* c_skew = app.add_subcommand("skew-basis", "list the skew basis of a multidegree component");
    c_skew->add_option("--multidegree", mdcsv, "comma-separated occurrence counts")->required();
    c_skew->callback([&] { exit_code = run_skew_basis(mdcsv, g); });

    auto* c_dim = app.add_subcommand("dim-st", "dimension of a multidegree component of the bracket subalgebra");
    c_dim->add_option("--multidegree", mdcsv, "comma-separated occurrence counts")->required();
    c_dim->callback([&] { exit_code = run_dim_st(mdcsv, g); });

    auto* c_verify = app.add_subcommand("verify", "randomized and exhaustive identity suites");
    c_verify->require_subcommand(1);
    auto* c_core = c_verify->add_subcommand("core", "product, shuffle, bracket, and rewrite identities");
    c_core->add_option("--max-degree", max_degree, "degree bound for random elements")
        ->capture_default_str();
    c_core->add_option("--trials", trials, "random trials per identity")->capture_default_str();
    c_core->add_option("--seed", seed, "random seed")->capture_default_str();
    c_core->callback([&] { exit_code = run_verify_core(max_degree, trials, seed, g); });

    auto* c_tort = app.add_subcommand("tortkara", "multilinear bracket-algebra computations");
    c_tort->require_subcommand(1);
    auto* c_mdim = c_tort->add_subcommand("mdim", "multilinear dimension of the free bracket algebra");
    c_mdim->add_option("-n", n, "number of variables")->required();
    c_mdim->callback([&] { exit_code = run_tortkara_mdim(n, g); });
    auto* c_scan = c_tort->add_subcommand("scan", "compare the free and embedded multilinear components");
    c_scan->add_option("-n", n, "number of variables")->required();
    c_scan->callback([&] { exit_code = run_tortkara_scan(n, g); });
    auto* c_twogen = c_tort->add_subcommand("two-gen", "rank of left-normed brackets in two generators");
    c_twogen->add_option("--max-degree", max_degree, "largest degree checked")
        ->capture_default_str();
    c_twogen->callback([&] { exit_code = run_tortkara_two_gen(max_degree, g); });

    auto* c_spec = app.add_subcommand("speciality", "ideal-membership certificates");
    c_spec->require_subcommand(1);
    auto* c_cohn = c_spec->add_subcommand("cohn", "inclusion criterion for a quotient presentation");
    c_cohn->add_option("--gens", gens_path, "file of generator expressions, one per line")
        ->required();
    c_cohn->add_option("--max-total", max_total, "largest total degree checked")
        ->capture_default_str();
    c_cohn->callback([&] { exit_code = run_cohn(gens_path, max_total, g); });
    auto* c_counter = c_spec->add_subcommand("counterexample",
                                             "three-generator quotient that fails the inclusion criterion");
    c_counter->callback([&] { exit_code = run_counterexample(g); });

    std::function<void(CLI::App*)> allow_trailing_globals = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands({})) allow_trailing_globals(s);
    };

    auto* c_remark = app.add_subcommand("remark1", "integration-operator products on truncated polynomials");
    c_remark->add_option("--cap", cap, "truncation degree")->capture_default_str();
    c_remark->add_option("--trials", trials, "random trials per identity")->capture_default_str();
    c_remark->add_option("--seed", seed, "random seed")->capture_default_str();
    c_remark->callback([&] { exit_code = run_remark1(cap, trials, seed, g); });

    for (CLI::App* s : app.get_subcommands({})) allow_trailing_globals(s);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZinError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
