#include "addcomb/checks.hpp"

#include <unordered_map>

#include "addcomb/errors.hpp"

namespace addcomb {

std::string CheckResult::line() const {
    std::string s = holds ? "ok   " : "FAIL ";
    s += name + "  lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
    if (!holds) s += "  witness " + witness;
    return s;
}

namespace {

std::string short_descriptor(const FiniteSet& A) {
    if (A.size() <= 8) return A.str();
    return "{" + A[0].str() + ", " + A[1].str() + ", ..., " + A[A.size() - 1].str() +
           "} (n=" + std::to_string(A.size()) + ")";
}

CheckResult make_result(std::string name, Integer lhs, Integer rhs, const FiniteSet& A) {
    CheckResult r;
    r.name = std::move(name);
    r.holds = lhs >= rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    if (!r.holds) r.witness = short_descriptor(A);
    return r;
}

}  // namespace

CheckResult check_ungar(const FiniteSet& A) {
    if (A.size() < 2) throw PreconditionError("check_ungar: |A| >= 2 required");
    FiniteSet D = diffset(A, A);
    Integer lhs(static_cast<unsigned long>(combine_cardinality(D, D, SetOp::div)));
    Integer n(static_cast<unsigned long>(A.size()));
    return make_result("ungar", lhs, n * n - 2, A);
}

CheckResult check_balog(const FiniteSet& A) {
    if (A.empty()) throw PreconditionError("check_balog: nonempty A required");
    if (A[0].sign() <= 0)
        throw PreconditionError("check_balog: all elements must be positive");
    FiniteSet S = sumset(A, A);
    Integer lhs(static_cast<unsigned long>(combine_cardinality(S, S, SetOp::div)));
    Integer n(static_cast<unsigned long>(A.size()));
    return make_result("balog", lhs, 2 * n * n - 1, A);
}

CheckResult check_cauchy_schwarz(const FiniteSet& B, CSMode mode) {
    if (B.empty()) throw PreconditionError("check_cauchy_schwarz: nonempty B required");
    if (mode == CSMode::ratio && B.contains(Rational(0)))
        throw PreconditionError("check_cauchy_schwarz: ratio mode requires 0 not in B");
    Integer energy = mult_energy(B);
    Integer card(static_cast<unsigned long>(
        combine_cardinality(B, B, mode == CSMode::ratio ? SetOp::div : SetOp::mul)));
    Integer n(static_cast<unsigned long>(B.size()));
    return make_result(mode == CSMode::ratio ? "cauchy-schwarz-ratio" : "cauchy-schwarz-product",
                       energy * card, n * n * n * n, B);
}

FiniteSet gp_set(int n) {
    if (n < 1) throw PreconditionError("gp_set: n >= 1 required");
    std::vector<Rational> v;
    v.reserve(n);
    Integer p = 1;
    for (int i = 1; i <= n; ++i) {
        p *= 2;
        v.emplace_back(p);
    }
    return FiniteSet::of(std::move(v));
}

namespace {

void require_middle_third(long value, long n) {
    long lo = n / 3, hi = 2 * n / 3 - 1;
    if (value < lo || value > hi)
        throw PreconditionError("octuple_from_quintuple: entry " + std::to_string(value) +
                                " outside middle third [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
}

Integer pow2(long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// (2^a + 2^b)(2^c + 2^d)
Integer pair_product(long a, long b, long c, long d) {
    return (pow2(a) + pow2(b)) * (pow2(c) + pow2(d));
}

}  // namespace

std::array<long, 8> octuple_from_quintuple(const std::array<long, 5>& q, long n) {
    if (n <= 0 || n % 3 != 0)
        throw PreconditionError("octuple_from_quintuple: n must be a positive multiple of 3");
    for (long v : q) require_middle_third(v, n);
    std::array<long, 8> o{q[0], q[1], q[2], q[3], q[4],
                          q[1] + q[4] - q[0], q[0] + q[2] - q[4], q[0] + q[3] - q[4]};
    return o;
}

Integer gp_octuple_energy(int n) {
    // Nondecreasing exponent pairs biject with sumset elements (Sidon),
    // so counting constrained octuples reproduces E*(A+A).
    std::vector<std::pair<long, long>> pairs;
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) pairs.emplace_back(i, j);
    std::unordered_map<Rational, long long, RationalHash> products;
    for (const auto& [i, j] : pairs)
        for (const auto& [k, l] : pairs) ++products[Rational(pair_product(i, j, k, l))];
    Integer total = 0;
    for (const auto& [value, count] : products) {
        Integer c(static_cast<long>(count));
        total += c * c;
    }
    return total;
}

CheckResult check_gp_energy(int n) {
    if (n <= 0 || n % 3 != 0)
        throw PreconditionError("check_gp_energy: n must be a positive multiple of 3");
    FiniteSet A = gp_set(n);
    bool sidon = is_sidon(A);

    // Every middle-third quintuple must extend to a valid octuple; the
    // first five coordinates make them pairwise distinct.
    bool octuples_ok = true;
    long lo = n / 3, hi = 2 * n / 3 - 1;
    std::array<long, 5> q{};
    long width = hi - lo + 1;
    long count = 1;
    for (int i = 0; i < 5; ++i) count *= width;
    for (long idx = 0; idx < count && octuples_ok; ++idx) {
        long rest = idx;
        for (int i = 0; i < 5; ++i) {
            q[i] = lo + rest % width;
            rest /= width;
        }
        auto o = octuple_from_quintuple(q, n);
        for (long v : o)
            if (v < 1 || v > n) octuples_ok = false;
        if (o[0] + o[2] != o[4] + o[6] || o[0] + o[3] != o[4] + o[7] ||
            o[1] + o[2] != o[5] + o[6] || o[1] + o[3] != o[5] + o[7])
            octuples_ok = false;
        if (pair_product(o[0], o[1], o[2], o[3]) != pair_product(o[4], o[5], o[6], o[7]))
            octuples_ok = false;
    }

    FiniteSet S = sumset(A, A);
    Integer energy = mult_energy(S);
    Integer rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n / 3), 5);

    CheckResult r;
    r.name = "gp-energy(n=" + std::to_string(n) + ")";
    r.lhs = energy;
    r.rhs = rhs;
    r.holds = sidon && octuples_ok && energy >= rhs;
    if (!r.holds) {
        r.witness = short_descriptor(A);
        if (!sidon) r.witness += " [not Sidon]";
        if (!octuples_ok) r.witness += " [octuple system violated]";
    }
    return r;
}

ProbeRecord structural_probe(const FiniteSet& A, const EvalLimits& limits,
                             bool throw_on_capacity) {
    if (A.size() < 2) throw PreconditionError("structural_probe: |A| >= 2 required");

    ProbeRecord rec;
    rec.descriptor = short_descriptor(A);
    rec.n = static_cast<long long>(A.size());
    Env env{{"A", A}};

    auto measure = [&](const char* src, std::optional<long long>& out) {
        auto ast = parse_expr(src);
        try {
            out = static_cast<long long>(eval_cardinality(*ast, env, limits));
        } catch (const CapacityError&) {
            if (throw_on_capacity) throw;
            rec.flags.push_back(std::string("capacity:") + format_expr(*ast));
        }
    };
    measure("A+A", rec.card_sumset);
    measure("A-A", rec.card_diffset);
    measure("(A+A)/(A+A)", rec.card_ratio_of_sumsets);
    measure("(A-A)*(A-A)", rec.card_prod_of_diffsets);
    measure("A*(A+A+A+A)", rec.card_a_times_4a);

    static const auto sum_expr = parse_expr("A+A");
    try {
        rec.energy_mult_sumset = mult_energy(eval_expr(*sum_expr, env, limits));
    } catch (const CapacityError&) {
        if (throw_on_capacity) throw;
        rec.flags.push_back("capacity:E*(A+A)");
    }

    Rational n_rat(static_cast<long>(A.size()));
    if (rec.card_sumset) rec.growth_sumset = Rational(static_cast<long>(*rec.card_sumset)) / n_rat;
    if (rec.card_ratio_of_sumsets)
        rec.density_ratioset = Rational(static_cast<long>(*rec.card_ratio_of_sumsets)) / (n_rat * n_rat);
    return rec;
}

}  // namespace addcomb
