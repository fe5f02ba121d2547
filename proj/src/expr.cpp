#include "zinbiel/expr.hpp"

#include <cctype>

#include "zinbiel/tortkara.hpp"
#include "zinbiel/zin_ops.hpp"

namespace zinbiel {

namespace {

enum class Tok {
    Name,
    UpperD,
    UpperJ,
    Int,
    Plus,
    Minus,
    Star,
    Hash,
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    End,
};

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c >= 'a' && c <= 'z') {
            ++i;
            while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || std::isdigit(static_cast<unsigned char>(s[i]))))
                ++i;
            out.push_back({Tok::Name, s.substr(start, i - start), start});
            continue;
        }
        if (c == 'D' || c == 'J') {
            out.push_back({c == 'D' ? Tok::UpperD : Tok::UpperJ, std::string(1, c), start});
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Int, s.substr(start, i - start), start});
            continue;
        }
        Tok t;
        switch (c) {
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '#': t = Tok::Hash; break;
            case '/': t = Tok::Slash; break;
            case ',': t = Tok::Comma; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case '[': t = Tok::LBracket; break;
            case ']': t = Tok::RBracket; break;
            case '{': t = Tok::LBrace; break;
            case '}': t = Tok::RBrace; break;
            default:
                throw SyntaxError(start, "unexpected character '" + std::string(1, c) + "'");
        }
        out.push_back({t, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

ExprPtr node(ExprKind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (peek().type != Tok::End)
            throw SyntaxError(peek().pos, "unexpected trailing input '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }

    Token expect(Tok t, const std::string& what) {
        if (peek().type != t)
            throw SyntaxError(peek().pos,
                              "expected " + what + " before '" +
                                  (peek().type == Tok::End ? "end of input" : peek().text) + "'");
        return take();
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            Tok op = take().type;
            ExprPtr right = parse_term();
            left = node(op == Tok::Plus ? ExprKind::Add : ExprKind::Sub, {left, right});
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_unary();
        while (peek().type == Tok::Star || peek().type == Tok::Hash) {
            Tok op = take().type;
            ExprPtr right = parse_unary();
            left = node(op == Tok::Star ? ExprKind::ZinMul : ExprKind::ShuffleMul, {left, right});
        }
        return left;
    }

    ExprPtr parse_unary() {
        if (peek().type == Tok::Minus) {
            take();
            return node(ExprKind::Neg, {parse_unary()});
        }
        return parse_atom();
    }

    ExprPtr parse_call(ExprKind kind, std::size_t arity, const std::string& name) {
        expect(Tok::LParen, "'(' after " + name);
        std::vector<ExprPtr> args;
        args.push_back(parse_expr());
        while (args.size() < arity) {
            expect(Tok::Comma, "','");
            args.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        return node(kind, std::move(args));
    }

    ExprPtr parse_atom() {
        const Token t = peek();
        switch (t.type) {
            case Tok::Int: {
                take();
                Scalar v(t.text);
                if (peek().type == Tok::Slash) {
                    take();
                    Token den = expect(Tok::Int, "denominator");
                    if (den.text.find_first_not_of('0') == std::string::npos)
                        throw SyntaxError(den.pos, "zero denominator");
                    v = Scalar(t.text + "/" + den.text);
                    v.canonicalize();
                }
                auto e = std::make_shared<Expr>();
                e->kind = ExprKind::Rational;
                e->value = v;
                return e;
            }
            case Tok::Name: {
                take();
                if (t.text == "p") return parse_call(ExprKind::CallP, 1, "'p'");
                if (t.text == "bar") return parse_call(ExprKind::CallBar, 1, "'bar'");
                auto e = std::make_shared<Expr>();
                e->kind = ExprKind::Generator;
                e->name = t.text;
                return e;
            }
            case Tok::UpperD:
                take();
                return parse_call(ExprKind::CallD, 1, "'D'");
            case Tok::UpperJ:
                take();
                return parse_call(ExprKind::CallJ, 3, "'J'");
            case Tok::LParen: {
                take();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::LBracket: {
                take();
                ExprPtr a = parse_expr();
                expect(Tok::Comma, "','");
                ExprPtr b = parse_expr();
                expect(Tok::RBracket, "']'");
                return node(ExprKind::Bracket, {a, b});
            }
            case Tok::LBrace: {
                take();
                ExprPtr a = parse_expr();
                expect(Tok::Comma, "','");
                ExprPtr b = parse_expr();
                expect(Tok::RBrace, "'}'");
                return node(ExprKind::Brace, {a, b});
            }
            case Tok::End:
                throw SyntaxError(t.pos, "unexpected end of input");
            default:
                throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

// Precedence levels for printing: additive 1, multiplicative 2, unary 3,
// atoms and calls 4.
int prec(ExprKind k) {
    switch (k) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::ZinMul:
        case ExprKind::ShuffleMul: return 2;
        case ExprKind::Neg: return 3;
        default: return 4;
    }
}

void print_rec(const ExprPtr& e, int min_prec, std::string& out) {
    const int p = prec(e->kind);
    const bool wrap = p < min_prec;
    if (wrap) out += '(';
    switch (e->kind) {
        case ExprKind::Generator:
            out += e->name;
            break;
        case ExprKind::Rational:
            out += e->value.get_str();
            break;
        case ExprKind::Neg:
            out += '-';
            print_rec(e->args[0], 3, out);
            break;
        case ExprKind::Add:
        case ExprKind::Sub:
            print_rec(e->args[0], 1, out);
            out += e->kind == ExprKind::Add ? " + " : " - ";
            print_rec(e->args[1], 2, out);
            break;
        case ExprKind::ZinMul:
        case ExprKind::ShuffleMul:
            print_rec(e->args[0], 2, out);
            out += e->kind == ExprKind::ZinMul ? '*' : '#';
            print_rec(e->args[1], 3, out);
            break;
        case ExprKind::Bracket:
        case ExprKind::Brace: {
            out += e->kind == ExprKind::Bracket ? '[' : '{';
            print_rec(e->args[0], 1, out);
            out += ',';
            print_rec(e->args[1], 1, out);
            out += e->kind == ExprKind::Bracket ? ']' : '}';
            break;
        }
        case ExprKind::CallP:
        case ExprKind::CallBar:
        case ExprKind::CallD:
        case ExprKind::CallJ: {
            out += e->kind == ExprKind::CallP    ? "p"
                   : e->kind == ExprKind::CallBar ? "bar"
                   : e->kind == ExprKind::CallD   ? "D"
                                                  : "J";
            out += '(';
            for (std::size_t i = 0; i < e->args.size(); ++i) {
                if (i) out += ',';
                print_rec(e->args[i], 1, out);
            }
            out += ')';
            break;
        }
    }
    if (wrap) out += ')';
}

const Scalar* as_scalar(const EvalValue& v) { return std::get_if<Scalar>(&v); }
const ZinElement* as_element(const EvalValue& v) { return std::get_if<ZinElement>(&v); }

ZinElement element_arg(const ExprPtr& e, EvalContext& ctx, const char* where) {
    EvalValue v = eval_value(e, ctx);
    if (const ZinElement* el = as_element(v)) return *el;
    throw EvalError(std::string("scalar operand where ") + where + " requires an element");
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const ExprPtr& e) {
    std::string out;
    print_rec(e, 1, out);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind || a->name != b->name || a->value != b->value ||
        a->args.size() != b->args.size())
        return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!expr_equal(a->args[i], b->args[i])) return false;
    return true;
}

GeneratorId EvalContext::id_for(const std::string& name) {
    if (!frozen) return alphabet.intern(name);
    GeneratorId id = alphabet.id_of(name);
    if (id == 0) throw EvalError("generator '" + name + "' is not in the declared alphabet");
    return id;
}

EvalValue eval_value(const ExprPtr& e, EvalContext& ctx) {
    switch (e->kind) {
        case ExprKind::Generator:
            return ZinElement::from_word(Word{{ctx.id_for(e->name)}});
        case ExprKind::Rational:
            return e->value;
        case ExprKind::Neg: {
            EvalValue v = eval_value(e->args[0], ctx);
            if (const Scalar* s = as_scalar(v)) return Scalar(-*s);
            return -*as_element(v);
        }
        case ExprKind::Add:
        case ExprKind::Sub: {
            EvalValue l = eval_value(e->args[0], ctx);
            EvalValue r = eval_value(e->args[1], ctx);
            const bool sub = e->kind == ExprKind::Sub;
            if (as_scalar(l) && as_scalar(r))
                return sub ? Scalar(*as_scalar(l) - *as_scalar(r))
                           : Scalar(*as_scalar(l) + *as_scalar(r));
            if (as_element(l) && as_element(r))
                return sub ? *as_element(l) - *as_element(r) : *as_element(l) + *as_element(r);
            throw EvalError("cannot add a scalar and an element");
        }
        case ExprKind::ZinMul: {
            EvalValue l = eval_value(e->args[0], ctx);
            EvalValue r = eval_value(e->args[1], ctx);
            if (as_scalar(l) && as_scalar(r)) return Scalar(*as_scalar(l) * *as_scalar(r));
            if (as_scalar(l)) return *as_scalar(l) * *as_element(r);
            if (as_scalar(r)) return *as_scalar(r) * *as_element(l);
            return zin_mul(*as_element(l), *as_element(r));
        }
        // Arguments are evaluated into locals left to right so that
        // first-appearance generator numbering is independent of the
        // compiler's call-argument order.
        case ExprKind::ShuffleMul: {
            ZinElement a = element_arg(e->args[0], ctx, "shuffle");
            ZinElement b = element_arg(e->args[1], ctx, "shuffle");
            return shuffle_mul(a, b);
        }
        case ExprKind::Bracket: {
            ZinElement a = element_arg(e->args[0], ctx, "a bracket");
            ZinElement b = element_arg(e->args[1], ctx, "a bracket");
            return commutator(a, b);
        }
        case ExprKind::Brace: {
            ZinElement a = element_arg(e->args[0], ctx, "a brace");
            ZinElement b = element_arg(e->args[1], ctx, "a brace");
            return anticommutator(a, b);
        }
        case ExprKind::CallP:
            return p_map(element_arg(e->args[0], ctx, "p"));
        case ExprKind::CallBar:
            return bar(element_arg(e->args[0], ctx, "bar"));
        case ExprKind::CallD:
            return dynkin(element_arg(e->args[0], ctx, "D"));
        case ExprKind::CallJ: {
            ZinElement a = element_arg(e->args[0], ctx, "J");
            ZinElement b = element_arg(e->args[1], ctx, "J");
            ZinElement c = element_arg(e->args[2], ctx, "J");
            return jacobiator(a, b, c);
        }
    }
    throw EvalError("unhandled expression node");
}

ZinElement eval(const ExprPtr& e, EvalContext& ctx) {
    EvalValue v = eval_value(e, ctx);
    if (as_scalar(v)) throw EvalError("expression evaluates to a bare scalar, not an element");
    return *as_element(v);
}

}  // namespace zinbiel
