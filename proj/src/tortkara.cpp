#include "zinbiel/tortkara.hpp"

#include <algorithm>
#include <array>

#include "zinbiel/criteria.hpp"
#include "zinbiel/errors.hpp"

namespace zinbiel {

namespace {

// Preorder well-formedness; returns the position just past the subtree.
std::size_t check_node(const std::vector<std::int32_t>& code, std::size_t pos) {
    if (pos >= code.size()) throw ZinError("tree code: truncated");
    if (code[pos] > 0) return pos + 1;
    if (code[pos] != 0) throw ZinError("tree code: negative entry");
    return check_node(code, check_node(code, pos + 1));
}

void validate_code(const std::vector<std::int32_t>& code) {
    if (code.empty() || check_node(code, 0) != code.size())
        throw ZinError("tree code: malformed");
}

std::int32_t min_leaf(const std::vector<std::int32_t>& code) {
    std::int32_t m = std::numeric_limits<std::int32_t>::max();
    for (std::int32_t v : code)
        if (v > 0) m = std::min(m, v);
    return m;
}

bool subtree_before(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    const std::int32_t ma = min_leaf(a), mb = min_leaf(b);
    if (ma != mb) return ma < mb;
    return a < b;
}

// Canonical code and swap sign; sign 0 flags a vanished subtree.
std::pair<std::vector<std::int32_t>, int> canon_rec(const std::vector<std::int32_t>& code,
                                                    std::size_t& pos) {
    const std::int32_t head = code[pos++];
    if (head > 0) return {{head}, 1};
    auto [l, sl] = canon_rec(code, pos);
    auto [r, sr] = canon_rec(code, pos);
    if (sl == 0 || sr == 0 || l == r) return {{}, 0};
    int sign = sl * sr;
    if (subtree_before(r, l)) {
        std::swap(l, r);
        sign = -sign;
    }
    std::vector<std::int32_t> out;
    out.reserve(1 + l.size() + r.size());
    out.push_back(0);
    out.insert(out.end(), l.begin(), l.end());
    out.insert(out.end(), r.begin(), r.end());
    return {std::move(out), sign};
}

ZinElement eval_rec(const std::vector<std::int32_t>& code, std::size_t& pos,
                    const std::map<GeneratorId, ZinElement>& assignment) {
    const std::int32_t head = code[pos++];
    if (head > 0) {
        auto it = assignment.find(head);
        if (it == assignment.end())
            throw UnassignedLeaf("eval_ac: no assignment for generator " + std::to_string(head));
        return it->second;
    }
    ZinElement l = eval_rec(code, pos, assignment);
    ZinElement r = eval_rec(code, pos, assignment);
    return commutator(l, r);
}

}  // namespace

std::size_t AcMono::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(code.begin(), code.end(), [](std::int32_t v) { return v > 0; }));
}

bool operator<(const AcMono& a, const AcMono& b) {
    const std::size_t la = a.leaf_count(), lb = b.leaf_count();
    if (la != lb) return la < lb;
    if (a.code != b.code) return a.code < b.code;
    return a.sign < b.sign;
}

AcMono ac_leaf(GeneratorId g) { return AcMono{{g}, 1}; }

AcMono ac_node(const AcMono& l, const AcMono& r) {
    AcMono m;
    m.code.reserve(1 + l.code.size() + r.code.size());
    m.code.push_back(0);
    m.code.insert(m.code.end(), l.code.begin(), l.code.end());
    m.code.insert(m.code.end(), r.code.begin(), r.code.end());
    m.sign = l.sign * r.sign;
    return m;
}

std::optional<AcMono> ac_canonicalize(const AcMono& m) {
    validate_code(m.code);
    std::size_t pos = 0;
    auto [code, sign] = canon_rec(m.code, pos);
    if (sign == 0) return std::nullopt;
    return AcMono{std::move(code), sign * m.sign};
}

void AcElement::add(AcMono m, Scalar c) {
    if (m.sign < 0) {
        c = -c;
        m.sign = 1;
    }
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(std::move(m), std::move(c));
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

AcElement ac_mono_element(const AcMono& m) {
    AcElement e;
    e.add(m, Scalar(1));
    return e;
}

AcElement ac_add(const AcElement& a, const AcElement& b) {
    AcElement out = a;
    for (const auto& [m, c] : b.terms) out.add(m, c);
    return out;
}

AcElement ac_sub(const AcElement& a, const AcElement& b) {
    AcElement out = a;
    for (const auto& [m, c] : b.terms) out.add(m, -c);
    return out;
}

AcElement ac_scale(const Scalar& c, const AcElement& a) {
    AcElement out;
    if (c == 0) return out;
    for (const auto& [m, x] : a.terms) out.add(m, c * x);
    return out;
}

AcElement ac_mul(const AcElement& a, const AcElement& b) {
    AcElement out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            auto prod = ac_canonicalize(ac_node(ma, mb));
            if (prod) out.add(std::move(*prod), ca * cb);
        }
    return out;
}

AcElement ac_jacobiator(const AcElement& a, const AcElement& b, const AcElement& c) {
    return ac_add(ac_add(ac_mul(ac_mul(a, b), c), ac_mul(ac_mul(b, c), a)),
                  ac_mul(ac_mul(c, a), b));
}

ZinElement eval_ac(const AcMono& m, const std::map<GeneratorId, ZinElement>& assignment) {
    validate_code(m.code);
    std::size_t pos = 0;
    ZinElement r = eval_rec(m.code, pos, assignment);
    return m.sign < 0 ? -r : r;
}

ZinElement eval_ac_element(const AcElement& e, const std::map<GeneratorId, ZinElement>& assignment) {
    ZinElement out;
    for (const auto& [m, c] : e.terms) out += c * eval_ac(m, assignment);
    return out;
}

ZinElement jacobiator(const ZinElement& a, const ZinElement& b, const ZinElement& c) {
    return commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
           commutator(commutator(c, a), b);
}

std::pair<ZinElement, ZinElement> verify_tortkara(const ZinElement& a, const ZinElement& b,
                                                  const ZinElement& c, const ZinElement& d) {
    ZinElement r2 = commutator(commutator(a, b), commutator(c, b)) -
                    commutator(jacobiator(a, b, c), b);
    ZinElement r3 = commutator(commutator(a, b), commutator(c, d)) +
                    commutator(commutator(a, d), commutator(c, b)) -
                    commutator(jacobiator(a, b, c), d) - commutator(jacobiator(a, d, c), b);
    return {std::move(r2), std::move(r3)};
}

ZinElement degree4_relation_check(const ZinElement& a, const ZinElement& b, const ZinElement& c,
                                  const ZinElement& d) {
    const Scalar half = make_scalar(1, 2);
    return commutator(commutator(a, b), commutator(c, d)) -
           half * commutator(jacobiator(b, c, d), a) +
           half * commutator(jacobiator(a, c, d), b) +
           half * commutator(jacobiator(a, b, d), c) -
           half * commutator(jacobiator(a, b, c), d);
}

namespace {

// Canonical multilinear monomials on a sorted variable list. The minimal
// variable sits in the left subtree, so splitting off the subsets containing
// vars[0] enumerates each canonical tree exactly once.
std::vector<std::vector<std::int32_t>> canonical_codes_on(const std::vector<std::int32_t>& vars) {
    if (vars.size() == 1) return {{vars[0]}};
    std::vector<std::vector<std::int32_t>> out;
    const std::size_t rest = vars.size() - 1;
    for (std::uint32_t mask = 0; mask + 1 < (1u << rest); ++mask) {
        std::vector<std::int32_t> left{vars[0]}, right;
        for (std::size_t i = 0; i < rest; ++i)
            ((mask >> i) & 1u ? left : right).push_back(vars[i + 1]);
        for (const auto& l : canonical_codes_on(left))
            for (const auto& r : canonical_codes_on(right)) {
                std::vector<std::int32_t> code;
                code.reserve(1 + l.size() + r.size());
                code.push_back(0);
                code.insert(code.end(), l.begin(), l.end());
                code.insert(code.end(), r.begin(), r.end());
                out.push_back(std::move(code));
            }
    }
    return out;
}

}  // namespace

std::vector<AcMono> multilinear_ac_basis(int n) {
    if (n < 1) throw DegreeTooSmall("multilinear_ac_basis: n >= 1 required");
    std::vector<std::int32_t> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i + 1;
    std::vector<AcMono> basis;
    for (auto& code : canonical_codes_on(vars)) basis.push_back(AcMono{std::move(code), 1});
    std::sort(basis.begin(), basis.end());
    return basis;
}

namespace {

// (ab)(cd) + (ad)(cb) - J(a,b,c)d - J(a,d,c)b expanded symbolically.
AcElement linearized_instance(const AcElement& a, const AcElement& b, const AcElement& c,
                              const AcElement& d) {
    AcElement lhs = ac_add(ac_mul(ac_mul(a, b), ac_mul(c, d)),
                           ac_mul(ac_mul(a, d), ac_mul(c, b)));
    AcElement rhs = ac_add(ac_mul(ac_jacobiator(a, b, c), d), ac_mul(ac_jacobiator(a, d, c), b));
    return ac_sub(lhs, rhs);
}

std::vector<std::int32_t> relabel_code(const std::vector<std::int32_t>& code,
                                       const std::vector<std::int32_t>& target) {
    std::vector<std::int32_t> out = code;
    for (auto& v : out)
        if (v > 0) v = target[v - 1];
    return out;
}

// Order-preserving relabeling keeps multilinear canonical forms canonical.
AcElement relabel_element(const AcElement& e, const std::vector<std::int32_t>& target) {
    AcElement out;
    for (const auto& [m, c] : e.terms) out.add(AcMono{relabel_code(m.code, target), m.sign}, c);
    return out;
}

struct Stage {
    std::vector<AcMono> basis;
    std::vector<AcElement> reduced;  // span basis rows as elements
    Span span{0};
};

// A pending consequence row: either a substitution instance of the linearized
// identity or a product of a lower-degree consequence with a monomial.
struct RowJob {
    bool is_instance = true;
    std::array<AcMono, 4> args;
    AcMono multiplier;
    const AcElement* factor = nullptr;
};

AcElement evaluate_job(const RowJob& job) {
    if (job.is_instance)
        return linearized_instance(ac_mono_element(job.args[0]), ac_mono_element(job.args[1]),
                                   ac_mono_element(job.args[2]), ac_mono_element(job.args[3]));
    return ac_mul(ac_mono_element(job.multiplier), *job.factor);
}

// All substitution instances at degree d: the four arguments are canonical
// monomials on the blocks of an ordered partition of {1..d} into four parts.
void instance_jobs(int d, std::vector<RowJob>& jobs) {
    std::vector<int> slot(d, 0);
    while (true) {
        bool used[4] = {false, false, false, false};
        for (int i = 0; i < d; ++i) used[slot[i]] = true;
        if (used[0] && used[1] && used[2] && used[3]) {
            std::array<std::vector<std::int32_t>, 4> blocks;
            for (int i = 0; i < d; ++i) blocks[slot[i]].push_back(i + 1);
            std::array<std::vector<std::vector<std::int32_t>>, 4> choices;
            for (int s = 0; s < 4; ++s) choices[s] = canonical_codes_on(blocks[s]);
            std::array<std::size_t, 4> pick{0, 0, 0, 0};
            while (true) {
                RowJob job;
                job.is_instance = true;
                for (int s = 0; s < 4; ++s) job.args[s] = AcMono{choices[s][pick[s]], 1};
                jobs.push_back(std::move(job));
                int s = 3;
                while (s >= 0 && ++pick[s] == choices[s].size()) pick[s--] = 0;
                if (s < 0) break;
            }
        }
        int i = d - 1;
        while (i >= 0 && ++slot[i] == 4) slot[i--] = 0;
        if (i < 0) break;
    }
}

// Stages for degrees 4..n in order; each span is reduced over its own basis.
std::vector<Stage> build_chain(int n) {
    std::vector<Stage> stages;
    for (int d = 4; d <= n; ++d) {
        Stage stage;
        stage.basis = multilinear_ac_basis(d);
        Coordinateizer<AcMono> coords(stage.basis);
        stage.span = Span(coords.dimension());

        std::vector<RowJob> jobs;
        instance_jobs(d, jobs);

        // Product rows: stage j basis relabeled onto each j-subset, times each
        // canonical monomial on the complement. Relabeled factors are stored
        // here so job pointers stay valid through the parallel phase.
        std::vector<AcElement> relabeled;
        struct ProductPlan {
            std::size_t factor_index;
            AcMono multiplier;
        };
        std::vector<ProductPlan> plans;
        for (int j = 4; j < d; ++j) {
            const Stage& lower = stages[static_cast<std::size_t>(j - 4)];
            if (lower.reduced.empty()) continue;
            std::vector<std::int32_t> subset(j);
            for (int i = 0; i < j; ++i) subset[i] = i + 1;
            while (true) {
                std::vector<std::int32_t> complement;
                std::size_t k = 0;
                for (int v = 1; v <= d; ++v) {
                    if (k < subset.size() && subset[k] == v) ++k;
                    else complement.push_back(v);
                }
                const auto multipliers = canonical_codes_on(complement);
                for (const AcElement& f : lower.reduced) {
                    relabeled.push_back(relabel_element(f, subset));
                    for (const auto& mult : multipliers)
                        plans.push_back({relabeled.size() - 1, AcMono{mult, 1}});
                }
                int i = j - 1;
                while (i >= 0 && subset[i] == d - (j - 1 - i)) --i;
                if (i < 0) break;
                ++subset[i];
                for (int t = i + 1; t < j; ++t) subset[t] = subset[t - 1] + 1;
            }
        }
        for (const ProductPlan& p : plans) {
            RowJob job;
            job.is_instance = false;
            job.multiplier = p.multiplier;
            job.factor = &relabeled[p.factor_index];
            jobs.push_back(std::move(job));
        }

        // Rows evaluate independently; the span insertion below is serial and
        // in job order, so the reduced result is deterministic.
        std::vector<AcElement> rows(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
            rows[static_cast<std::size_t>(i)] = evaluate_job(jobs[static_cast<std::size_t>(i)]);

        for (const AcElement& row : rows) {
            if (row.is_zero()) continue;
            std::vector<std::pair<AcMono, Scalar>> terms(row.terms.begin(), row.terms.end());
            stage.span.insert(coords.row(terms));
        }

        for (const auto& [pivot, r] : stage.span.rows()) {
            (void)pivot;
            AcElement e;
            for (const auto& [col, c] : r) e.add(coords.key(col), c);
            stage.reduced.push_back(std::move(e));
        }
        stages.push_back(std::move(stage));
    }
    return stages;
}

}  // namespace

ConsequenceSpan tortkara_consequence_span(int n) {
    if (n < 4) throw DegreeTooSmall("tortkara_consequence_span: n >= 4 required");
    std::vector<Stage> stages = build_chain(n);
    Stage& top = stages.back();
    return ConsequenceSpan{Coordinateizer<AcMono>(top.basis), std::move(top.span)};
}

Integer free_tortkara_multilinear_dim(int n) {
    if (n < 2) throw DegreeTooSmall("free_tortkara_multilinear_dim: n >= 2 required");
    const Integer ambient(static_cast<long>(multilinear_ac_basis(n).size()));
    if (n < 4) return ambient;
    ConsequenceSpan cs = tortkara_consequence_span(n);
    return ambient - Integer(static_cast<long>(cs.span.rank()));
}

ScanReport s_identity_scan(int n) {
    if (n < 2) throw DegreeTooSmall("s_identity_scan: n >= 2 required");
    ScanReport report;
    report.n = n;
    const std::vector<AcMono> basis = multilinear_ac_basis(n);
    report.ambient_dim = Integer(static_cast<long>(basis.size()));

    Coordinateizer<AcMono> mono_coords(basis);
    Span consequences(mono_coords.dimension());
    if (n >= 4) {
        ConsequenceSpan cs = tortkara_consequence_span(n);
        consequences = std::move(cs.span);
    }
    report.consequence_rank = Integer(static_cast<long>(consequences.rank()));
    report.quotient_dim = report.ambient_dim - report.consequence_rank;
    report.special_dim = factorial(n) / 2;
    {
        MultiDegree all_ones;
        for (int i = 1; i <= n; ++i) all_ones.counts[i] = 1;
        if (report.special_dim != dim_st(all_ones))
            throw CertificateViolation("s_identity_scan: skew dimension formula mismatch");
    }

    // Evaluation of each monomial through the commutator, in multilinear word
    // coordinates; the kernel of this map contains every consequence.
    MultiDegree d;
    for (int i = 1; i <= n; ++i) d.counts[i] = 1;
    Coordinateizer<Word> word_coords(enumerate_words(d));
    std::map<GeneratorId, ZinElement> identity_assignment;
    for (int i = 1; i <= n; ++i)
        identity_assignment.emplace(i, ZinElement::from_word(Word{{static_cast<GeneratorId>(i)}}));

    std::vector<ZinElement> evals(basis.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(basis.size()); ++i)
        evals[static_cast<std::size_t>(i)] =
            eval_ac(basis[static_cast<std::size_t>(i)], identity_assignment);

    std::vector<SparseRow> eval_rows;
    eval_rows.reserve(basis.size());
    for (const ZinElement& e : evals) eval_rows.push_back(to_vector(e, word_coords));

    // Every consequence row must evaluate to zero; the identities hold in the
    // commutator algebra, so anything else is a construction bug.
    for (const auto& [pivot, r] : consequences.rows()) {
        (void)pivot;
        ZinElement image;
        for (const auto& [col, c] : r) image += c * evals[col];
        if (!image.is_zero())
            throw CertificateViolation("s_identity_scan: consequence with nonzero evaluation");
    }

    // Kernel combinations that grow the consequence span are the candidates.
    Span grown = consequences;
    for (const auto& combo : kernel_of(eval_rows, word_coords.dimension())) {
        SparseRow row;
        for (std::size_t i = 0; i < combo.size(); ++i)
            if (combo[i] != 0) row.emplace_back(static_cast<ColIndex>(i), combo[i]);
        if (grown.insert(row)) {
            AcElement e;
            for (const auto& [col, c] : row) e.add(mono_coords.key(col), c);
            report.kernel.push_back(std::move(e));
        }
    }
    return report;
}

int left_normed_rank(int n) {
    if (n < 2) throw DegreeTooSmall("left_normed_rank: n >= 2 required");
    // all length-n words over the two generators
    std::vector<Word> words;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Word w;
        w.letters.reserve(n);
        for (int i = 0; i < n; ++i)
            w.letters.push_back(((mask >> i) & 1u) ? GeneratorId(2) : GeneratorId(1));
        words.push_back(std::move(w));
    }
    Coordinateizer<Word> coords(std::move(words));
    Span span(coords.dimension());
    const ZinElement x = ZinElement::from_word(Word{{1}});
    const ZinElement y = ZinElement::from_word(Word{{2}});
    const ZinElement base = commutator(x, y);
    for (std::uint32_t mask = 0; mask < (1u << (n - 2)); ++mask) {
        ZinElement f = base;
        for (int i = 0; i < n - 2; ++i) f = commutator(f, ((mask >> i) & 1u) ? y : x);
        span.insert(to_vector(f, coords));
    }
    return static_cast<int>(span.rank());
}

}  // namespace zinbiel
