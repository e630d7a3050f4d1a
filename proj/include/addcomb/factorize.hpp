#pragma once

#include <utility>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

// Complete prime factorization: (prime, exponent) pairs with primes
// strictly increasing. The empty factorization is 1.
struct Factorization {
    std::vector<std::pair<Integer, unsigned>> factors;

    Integer recompose() const;
    bool empty() const { return factors.empty(); }
};

inline constexpr unsigned long long kDefaultFactorBound = 1'000'000'000'000ULL;  // 10^12

// Trial division. Requires n >= 1. Divisors are tried up to sqrt(bound);
// a remaining cofactor <= bound is therefore prime, while a cofactor
// above the bound raises CapacityError.
Factorization factorize(const Integer& n, unsigned long long bound = kDefaultFactorBound);

}  // namespace addcomb
