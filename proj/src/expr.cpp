#include "addcomb/expr.hpp"

#include <cctype>

#include "addcomb/errors.hpp"

namespace addcomb {

std::unique_ptr<Expr> Expr::variable(std::string name) {
    auto e = std::make_unique<Expr>();
    e->kind = Kind::variable;
    e->name = std::move(name);
    return e;
}

std::unique_ptr<Expr> Expr::binary(SetOp op, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r) {
    auto e = std::make_unique<Expr>();
    e->kind = Kind::binary;
    e->op = op;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    std::unique_ptr<Expr> parse_factor() {
        char c = peek();
        std::size_t begin = pos;
        if (c == '(') {
            ++pos;
            auto inner = parse_expr_rule();
            if (peek() != ')') throw SyntaxError(pos, "')'");
            ++pos;
            inner->span_begin = begin;
            inner->span_end = pos;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            auto e = Expr::variable(std::string(src.substr(start, pos - start)));
            e->span_begin = start;
            e->span_end = pos;
            return e;
        }
        throw SyntaxError(pos, "identifier or '('");
    }

    std::unique_ptr<Expr> parse_term() {
        auto left = parse_factor();
        for (;;) {
            char c = peek();
            SetOp op;
            if (c == '*')
                op = SetOp::mul;
            else if (c == '/')
                op = SetOp::div;
            else if (c == '(')
                op = SetOp::mul;  // juxtaposition before '(' is multiplication
            else
                break;
            if (c != '(') ++pos;
            std::size_t begin = left->span_begin;
            auto right = parse_factor();
            std::size_t end = right->span_end;
            left = Expr::binary(op, std::move(left), std::move(right));
            left->span_begin = begin;
            left->span_end = end;
        }
        return left;
    }

    std::unique_ptr<Expr> parse_expr_rule() {
        auto left = parse_term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            std::size_t begin = left->span_begin;
            auto right = parse_term();
            std::size_t end = right->span_end;
            left = Expr::binary(c == '+' ? SetOp::add : SetOp::sub, std::move(left),
                                std::move(right));
            left->span_begin = begin;
            left->span_end = end;
        }
        return left;
    }
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view src) {
    Parser p{src};
    auto e = p.parse_expr_rule();
    if (p.peek() != '\0') throw SyntaxError(p.pos, "operator or end of input");
    return e;
}

std::string format_expr(const Expr& e) {
    if (e.kind == Expr::Kind::variable) return e.name;
    return "(" + format_expr(*e.left) + set_op_symbol(e.op) + format_expr(*e.right) + ")";
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Expr::Kind::variable) return a.name == b.name;
    return a.op == b.op && expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
}

namespace {

void collect_variables(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == Expr::Kind::variable) {
        for (const auto& n : out)
            if (n == e.name) return;
        out.push_back(e.name);
        return;
    }
    collect_variables(*e.left, out);
    collect_variables(*e.right, out);
}

const FiniteSet& lookup(const std::string& name, const Env& env) {
    auto it = env.find(name);
    if (it == env.end()) throw NameError("unbound variable '" + name + "'");
    return it->second;
}

void check_budget(const Expr& node, const FiniteSet& l, const FiniteSet& r,
                  const EvalLimits& limits) {
    std::size_t pairs = l.size() * r.size();
    if (pairs > limits.max_pairs || pairs > limits.max_elements)
        throw CapacityError("memory budget exceeded evaluating " + format_expr(node));
}

}  // namespace

std::vector<std::string> expr_variables(const Expr& e) {
    std::vector<std::string> out;
    collect_variables(e, out);
    return out;
}

FiniteSet eval_expr(const Expr& e, const Env& env, const EvalLimits& limits) {
    if (e.kind == Expr::Kind::variable) return lookup(e.name, env);
    FiniteSet l = eval_expr(*e.left, env, limits);
    FiniteSet r = eval_expr(*e.right, env, limits);
    check_budget(e, l, r, limits);
    return combine(l, r, e.op);
}

std::size_t eval_cardinality(const Expr& e, const Env& env, const EvalLimits& limits) {
    if (e.kind == Expr::Kind::variable) return lookup(e.name, env).size();
    FiniteSet l = eval_expr(*e.left, env, limits);
    FiniteSet r = eval_expr(*e.right, env, limits);
    check_budget(e, l, r, limits);
    return combine_cardinality(l, r, e.op);
}

}  // namespace addcomb
