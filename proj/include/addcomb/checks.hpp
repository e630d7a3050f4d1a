#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/expr.hpp"
#include "addcomb/finite_set.hpp"

namespace addcomb {

// Outcome of one exact inequality check. holds == (lhs >= rhs); a witness
// describing the violating input is present exactly when the check fails.
struct CheckResult {
    std::string name;
    Integer lhs, rhs;
    bool holds = false;
    std::string witness;

    std::string line() const;  // one human-readable line
};

// |(A-A)/(A-A)| >= |A|^2 - 2. Requires |A| >= 2.
CheckResult check_ungar(const FiniteSet& A);

// |(A+A)/(A+A)| >= 2|A|^2 - 1. Requires nonempty A with all elements > 0.
CheckResult check_balog(const FiniteSet& A);

enum class CSMode { ratio, product };

// E*(B) |B/B| >= |B|^4 (ratio mode; requires 0 not in B) or
// E*(B) |BB| >= |B|^4 (product mode). Requires nonempty B.
CheckResult check_cauchy_schwarz(const FiniteSet& B, CSMode mode);

// {2^1, ..., 2^n}. Requires n >= 1.
FiniteSet gp_set(int n);

// Extends a quintuple from the middle third {n/3, ..., 2n/3 - 1} to the
// octuple (n1..n5, n2+n5-n1, n1+n3-n5, n1+n4-n5), whose entries lie in
// [1, n] and which satisfies n1+n3 = n5+n7, n1+n4 = n5+n8, n2+n3 = n6+n7,
// n2+n4 = n6+n8. Requires n a positive multiple of 3.
std::array<long, 8> octuple_from_quintuple(const std::array<long, 5>& q, long n);

// For A = {2^1..2^n} (n a multiple of 3): verifies that A is Sidon, that
// every middle-third quintuple's octuple satisfies the linear system and,
// after exponentiation, the product identity
// (2^n1+2^n2)(2^n3+2^n4) = (2^n5+2^n6)(2^n7+2^n8), and that
// E*(A+A) >= (n/3)^5 exactly.
CheckResult check_gp_energy(int n);

// E*(A+A) as the count of exponent octuples solving the product identity,
// one octuple per value quadruple: within each of the four exponent pairs
// the entries are taken nondecreasing, and the Sidon property of A makes
// that correspondence a bijection.
Integer gp_octuple_energy(int n);

// Exact measurements for one set; quantities that exceed the memory
// budget are left empty with a flag naming the offending expression.
struct ProbeRecord {
    std::string descriptor;
    long long n = 0;  // |A|
    std::optional<long long> card_sumset, card_diffset;
    std::optional<long long> card_ratio_of_sumsets;   // |(A+A)/(A+A)|
    std::optional<long long> card_prod_of_diffsets;   // |(A-A)(A-A)|
    std::optional<long long> card_a_times_4a;         // |A(A+A+A+A)|
    std::optional<Integer> energy_mult_sumset;        // E*(A+A)
    std::optional<Rational> growth_sumset;            // |A+A| / |A|
    std::optional<Rational> density_ratioset;         // |(A+A)/(A+A)| / |A|^2
    std::vector<std::string> flags;                   // "capacity:<expr>" entries
};

// Pure measurement via expression evaluation; no assertions. Requires
// |A| >= 2. With throw_on_capacity, the first budget overrun raises
// CapacityError naming the expression; otherwise it is recorded in flags.
ProbeRecord structural_probe(const FiniteSet& A, const EvalLimits& limits = {},
                             bool throw_on_capacity = true);

}  // namespace addcomb
