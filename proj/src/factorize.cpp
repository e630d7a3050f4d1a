#include "addcomb/factorize.hpp"

#include <cmath>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

unsigned long long isqrt_ull(unsigned long long n) {
    auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

Factorization factorize_ull(unsigned long long m, unsigned long long bound,
                            unsigned long long divisor_cap) {
    Factorization f;
    auto strip = [&](unsigned long long d) {
        if (m % d != 0) return;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        f.factors.emplace_back(Integer(static_cast<unsigned long>(d)), e);
    };
    strip(2);
    for (unsigned long long d = 3; d <= divisor_cap && d <= m / d; d += 2) strip(d);
    if (m > 1) {
        if (m > bound)
            throw CapacityError("factorize: cofactor " + Integer(static_cast<unsigned long>(m)).get_str() +
                                " exceeds trial-division bound");
        f.factors.emplace_back(Integer(static_cast<unsigned long>(m)), 1u);
    }
    return f;
}

}  // namespace

Integer Factorization::recompose() const {
    Integer r(1), p;
    for (const auto& [prime, exp] : factors) {
        mpz_pow_ui(p.get_mpz_t(), prime.get_mpz_t(), exp);
        r *= p;
    }
    return r;
}

Factorization factorize(const Integer& n, unsigned long long bound) {
    if (sgn(n) <= 0) throw PreconditionError("factorize: argument must be positive");
    unsigned long long divisor_cap = isqrt_ull(bound);

    if (n.fits_ulong_p())
        return factorize_ull(n.get_ui(), bound, divisor_cap);

    // Oversized input: strip small primes, then the cofactor must still be
    // within the bound to be certified prime.
    Factorization f;
    Integer m = n;
    auto strip = [&](unsigned long d) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) return;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        }
        f.factors.emplace_back(Integer(d), e);
    };
    strip(2);
    for (unsigned long long d = 3; d <= divisor_cap; d += 2) {
        if (m == 1) break;
        if (m.fits_ulong_p()) {
            // All factors below d are already stripped; the remainder's
            // factorization appends in increasing order.
            auto rest = factorize_ull(m.get_ui(), bound, divisor_cap);
            for (auto& pe : rest.factors) f.factors.push_back(std::move(pe));
            return f;
        }
        strip(static_cast<unsigned long>(d));
    }
    if (m > 1) {
        if (m > Integer(static_cast<unsigned long>(bound)))
            throw CapacityError("factorize: cofactor " + m.get_str() +
                                " exceeds trial-division bound");
        f.factors.emplace_back(m, 1u);
    }
    return f;
}

}  // namespace addcomb
