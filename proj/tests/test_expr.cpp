#include <doctest.h>

#include "addcomb/expr.hpp"
#include "addcomb/rng.hpp"

using namespace addcomb;

namespace {

std::unique_ptr<Expr> random_ast(SplitMix64& rng, int depth) {
    if (depth == 0 || rng.below(3) == 0) {
        const char* names[] = {"A", "B", "C", "Set1", "x_y"};
        return Expr::variable(names[rng.below(5)]);
    }
    SetOp ops[] = {SetOp::add, SetOp::sub, SetOp::mul, SetOp::div};
    return Expr::binary(ops[rng.below(4)], random_ast(rng, depth - 1), random_ast(rng, depth - 1));
}

}  // namespace

TEST_CASE("parse shapes") {
    auto e = parse_expr("(A+A)/(A+A)");
    REQUIRE(e->kind == Expr::Kind::binary);
    CHECK(e->op == SetOp::div);
    CHECK(e->left->op == SetOp::add);
    CHECK(e->right->op == SetOp::add);
    CHECK(format_expr(*e) == "((A+A)/(A+A))");

    // juxtaposition before '(' is multiplication; '+' is left associative
    auto j = parse_expr("A(A+A+A+A)");
    REQUIRE(j->kind == Expr::Kind::binary);
    CHECK(j->op == SetOp::mul);
    CHECK(j->left->name == "A");
    CHECK(format_expr(*j) == "(A*(((A+A)+A)+A))");

    CHECK(format_expr(*parse_expr("A")) == "A");
    CHECK(format_expr(*parse_expr("(A-A)(A-A)")) == "((A-A)*(A-A))");
    CHECK(format_expr(*parse_expr("A-B+C")) == "((A-B)+C)");
    CHECK(format_expr(*parse_expr("A*B/C")) == "((A*B)/C)");
    CHECK(format_expr(*parse_expr("A+B*C")) == "(A+(B*C))");
    CHECK(format_expr(*parse_expr(" A + B ")) == "(A+B)");
}

TEST_CASE("syntax errors carry position and expectation") {
    try {
        parse_expr("A+*A");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 2);
        CHECK(e.expected() == "identifier or '('");
    }
    CHECK_THROWS_AS(parse_expr(""), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(A+A"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("A B"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("A+"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("A)"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("3+A"), SyntaxError);  // no scalar literals
}

TEST_CASE("spans cover the source") {
    auto e = parse_expr("A(B+C)");
    CHECK(e->span_begin == 0);
    CHECK(e->span_end == 6);
    CHECK(e->right->span_begin == 1);
    CHECK(e->right->span_end == 6);
}

TEST_CASE("format/parse round trips") {
    SplitMix64 rng(67);
    for (int i = 0; i < 200; ++i) {
        auto ast = random_ast(rng, 4);
        std::string text = format_expr(*ast);
        auto reparsed = parse_expr(text);
        CHECK(expr_equal(*ast, *reparsed));
        CHECK(format_expr(*reparsed) == text);  // idempotent on text
    }
    // and on paper-style spellings
    for (const char* s : {"(A+A)/(A+A)", "A(A+A+A+A)", "(A-A)(A-A)", "A*(B+C)"}) {
        std::string once = format_expr(*parse_expr(s));
        CHECK(format_expr(*parse_expr(once)) == once);
    }
}

TEST_CASE("eval matches the paper's independent-quantification semantics") {
    FiniteSet a01 = FiniteSet::of_integers({0, 1});
    Env env{{"A", a01}};
    CHECK(eval_expr(*parse_expr("(A-A)/(A-A)"), env) == FiniteSet::of_integers({-1, 0, 1}));

    Env env12{{"A", FiniteSet::of_integers({1, 2})}};
    CHECK(eval_expr(*parse_expr("A+A"), env12) == FiniteSet::of_integers({2, 3, 4}));

    Env env1{{"A", FiniteSet::of_integers({1})}};
    CHECK(eval_expr(*parse_expr("A*(A+A)"), env1) == FiniteSet::of_integers({2}));
}

TEST_CASE("eval agrees with direct set-core calls") {
    SplitMix64 rng(71);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> v;
        for (int k = 0, n = static_cast<int>(rng.range(1, 8)); k < n; ++k)
            v.emplace_back(rng.range(-9, 9), rng.range(1, 4));
        FiniteSet a = FiniteSet::of(std::move(v));
        Env env{{"A", a}};
        CHECK(eval_expr(*parse_expr("A+A"), env) == sumset(a, a));
        CHECK(eval_expr(*parse_expr("A-A"), env) == diffset(a, a));
        CHECK(eval_expr(*parse_expr("A*A"), env) == productset(a, a));
        CHECK(eval_expr(*parse_expr("A/A"), env) == ratioset(a, a));
        CHECK(eval_cardinality(*parse_expr("(A+A)/(A-A)"), env) ==
              ratioset(sumset(a, a), diffset(a, a)).size());
    }
}

TEST_CASE("division never raises: zero divisors are skipped") {
    Env env{{"A", FiniteSet::of_integers({0})}};
    CHECK(eval_expr(*parse_expr("A/A"), env).empty());
    Env env2{{"A", FiniteSet::of_integers({-1, 0, 1})}};
    CHECK(eval_expr(*parse_expr("A/(A-A)"), env2) ==
          FiniteSet::of({Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)}));
}

TEST_CASE("unbound variables raise NameError") {
    Env env{{"A", FiniteSet::of_integers({1})}};
    CHECK_THROWS_AS(eval_expr(*parse_expr("A+B"), env), NameError);
    auto vars = expr_variables(*parse_expr("A*(B+C)+A"));
    REQUIRE(vars.size() == 3);
    CHECK(vars[0] == "A");
    CHECK(vars[1] == "B");
    CHECK(vars[2] == "C");
}

TEST_CASE("memory budget names the offending subexpression") {
    std::vector<Rational> v;
    for (long i = 1; i <= 50; ++i) v.emplace_back(i);
    Env env{{"A", FiniteSet::of(std::move(v))}};
    EvalLimits limits;
    limits.max_pairs = 1000;  // 50*50 = 2500 pairs at the first node
    try {
        eval_expr(*parse_expr("(A+A)/(A+A)"), env, limits);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("(A+A)") != std::string::npos);
    }
}
