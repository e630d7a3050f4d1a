#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "addcomb/finite_set.hpp"

namespace addcomb {

// Set expression AST. Leaves are named set variables; interior nodes are
// binary +, -, *, / with independent-quantification semantics: every leaf
// occurrence ranges over its whole set, so "(A-A)/(A-A)" means
// {(a-b)/(c-d)} with all four variables independent.
struct Expr {
    enum class Kind { variable, binary };

    Kind kind;
    std::string name;             // variable
    SetOp op = SetOp::add;        // binary
    std::unique_ptr<Expr> left, right;
    std::size_t span_begin = 0, span_end = 0;  // byte range in the source text

    static std::unique_ptr<Expr> variable(std::string name);
    static std::unique_ptr<Expr> binary(SetOp op, std::unique_ptr<Expr> l,
                                        std::unique_ptr<Expr> r);
};

// Grammar:
//   Expr   := Term (('+'|'-') Term)*
//   Term   := Factor (('*'|'/')? Factor)*     -- omitted operator means
//             multiplication and is only allowed before '(' (so "A(A+A)"
//             is A*(A+A) while "AB" is a single identifier)
//   Factor := identifier | '(' Expr ')'
// with the usual precedence (*,/ over +,-) and left associativity.
// Throws SyntaxError carrying position and expected-token description.
std::unique_ptr<Expr> parse_expr(std::string_view src);

// Canonical fully parenthesized form; parse_expr(format_expr(t)) == t.
std::string format_expr(const Expr& e);

// Structural equality; spans are ignored.
bool expr_equal(const Expr& a, const Expr& b);

// Variable names in first-occurrence order.
std::vector<std::string> expr_variables(const Expr& e);

using Env = std::map<std::string, FiniteSet>;

struct EvalLimits {
    // A binary node combining |L| x |R| pairs (or producing more than
    // max_elements values) raises CapacityError naming the subexpression.
    std::size_t max_pairs = 10'000'000;
    std::size_t max_elements = 10'000'000;
};

// Bottom-up evaluation over the environment. Unbound names raise
// NameError; '/' skips zero divisors and never raises division errors.
FiniteSet eval_expr(const Expr& e, const Env& env, const EvalLimits& limits = {});

// Cardinality of eval_expr(e) with the root combination counted via
// hashing instead of materializing the sorted set.
std::size_t eval_cardinality(const Expr& e, const Env& env, const EvalLimits& limits = {});

}  // namespace addcomb
