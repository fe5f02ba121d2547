#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "zinbiel/element.hpp"
#include "zinbiel/errors.hpp"

namespace zinbiel {

// Expression language:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'#') unary)*          left-associative
//   unary  := '-' unary | atom
//   atom   := rational | generator | call | '(' expr ')'
//           | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//   call   := 'p' | 'bar' | 'D' takes one argument, 'J' takes three
// Generator names match [a-z][a-z0-9]*; `p` and `bar` are reserved for the
// calls.  Rational literals are INT or INT/INT; juxtaposition is not a
// product, so "3/2 x" is a syntax error.
enum class ExprKind {
    Generator,
    Rational,
    Neg,
    Add,
    Sub,
    ZinMul,
    ShuffleMul,
    Bracket,
    Brace,
    CallP,
    CallBar,
    CallD,
    CallJ,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    std::string name;           // Generator
    Scalar value;               // Rational (nonnegative; minus parses as Neg)
    std::vector<ExprPtr> args;
};

// Throws SyntaxError with a 0-based character position.
ExprPtr parse(const std::string& text);

// Minimal-parentheses rendering; print(parse(t)) reparses to an equal tree.
std::string print(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Generator ids are assigned in first-appearance order unless the alphabet
// is frozen up front, in which case unknown names are EvalErrors.
struct EvalContext {
    Alphabet alphabet;
    bool frozen = false;

    GeneratorId id_for(const std::string& name);
};

using EvalValue = std::variant<Scalar, ZinElement>;

// Scalars survive inside sums, products, and scalar multiples; everything
// else (shuffle, brackets, calls) demands elements and throws EvalError.
EvalValue eval_value(const ExprPtr& e, EvalContext& ctx);

// Rejects a bare-scalar result with EvalError; bar propagates DegreeOneSupport.
ZinElement eval(const ExprPtr& e, EvalContext& ctx);

}  // namespace zinbiel
