#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "addcomb/finite_set.hpp"

namespace addcomb {

enum class FamilyKind { interval, arithmetic, geometric, random_subset, union_dilate };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);  // ConfigError

// Deterministic generator description. The same (spec, seed) always
// produces the same set.
struct FamilySpec {
    FamilyKind kind = FamilyKind::interval;
    long long n = 0;            // requested size (base size for union_dilate)
    Rational start{1};          // arithmetic
    Rational step{1};           // arithmetic; nonzero
    Rational ratio{2};          // geometric; |ratio| != 1, ratio != 0
    Rational lambda{3};         // union_dilate; nonzero
    long long universe = 0;     // random_subset upper bound M >= n
    std::uint64_t seed = 0;     // random kinds only

    std::string label() const;  // comma-free, e.g. "geometric(n=6;ratio=2)"
};

// interval: {1..n}; arithmetic: {start + i*step}; geometric: {ratio^1..ratio^n};
// random_subset: n distinct uniform draws from [1, M]; union_dilate:
// {1..n} u lambda*{1..n} (size between n and 2n depending on overlap).
// Invalid parameters raise ConfigError.
FiniteSet gen_family(const FamilySpec& spec);

// Build a spec from CLI-style key=value parameters.
FamilySpec family_from_params(const std::string& kind,
                              const std::map<std::string, std::string>& params,
                              std::uint64_t seed);

// Deterministic sample across every family kind with sizes cycling
// through [min_n, max_n]; used by the verification sweeps.
std::vector<FamilySpec> default_verification_specs(int count, long long min_n, long long max_n,
                                                   std::uint64_t seed);

// The default survey families: intervals, an AP, GPs of ratio 2 and 3,
// random subsets of [1, 10n], and {1..n} u lambda*{1..n}.
std::vector<FamilySpec> default_survey_specs();

}  // namespace addcomb
