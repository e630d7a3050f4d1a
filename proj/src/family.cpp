#include "addcomb/family.hpp"

#include <set>

#include "addcomb/errors.hpp"
#include "addcomb/rng.hpp"

namespace addcomb {

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::interval: return "interval";
        case FamilyKind::arithmetic: return "arithmetic";
        case FamilyKind::geometric: return "geometric";
        case FamilyKind::random_subset: return "random_subset";
        case FamilyKind::union_dilate: return "union_dilate";
    }
    return "?";
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "interval") return FamilyKind::interval;
    if (name == "arithmetic") return FamilyKind::arithmetic;
    if (name == "geometric") return FamilyKind::geometric;
    if (name == "random_subset") return FamilyKind::random_subset;
    if (name == "union_dilate") return FamilyKind::union_dilate;
    throw ConfigError("unknown family kind: " + name);
}

std::string FamilySpec::label() const {
    std::string s = family_kind_name(kind) + "(n=" + std::to_string(n);
    switch (kind) {
        case FamilyKind::interval:
            break;
        case FamilyKind::arithmetic:
            s += ";start=" + start.str() + ";step=" + step.str();
            break;
        case FamilyKind::geometric:
            s += ";ratio=" + ratio.str();
            break;
        case FamilyKind::random_subset:
            s += ";M=" + std::to_string(universe);
            break;
        case FamilyKind::union_dilate:
            s += ";lambda=" + lambda.str();
            break;
    }
    return s + ")";
}

FiniteSet gen_family(const FamilySpec& spec) {
    if (spec.n < 1) throw ConfigError("gen_family: n >= 1 required");
    std::vector<Rational> v;
    switch (spec.kind) {
        case FamilyKind::interval:
            for (long long i = 1; i <= spec.n; ++i) v.emplace_back(static_cast<long>(i));
            break;
        case FamilyKind::arithmetic: {
            if (spec.step.is_zero()) throw ConfigError("gen_family: arithmetic step must be nonzero");
            Rational x = spec.start;
            for (long long i = 0; i < spec.n; ++i, x += spec.step) v.push_back(x);
            break;
        }
        case FamilyKind::geometric: {
            if (spec.ratio.is_zero() || abs(spec.ratio) == Rational(1))
                throw ConfigError("gen_family: geometric ratio must have |ratio| != 1 and be nonzero");
            Rational x(1);
            for (long long i = 1; i <= spec.n; ++i) {
                x *= spec.ratio;
                v.push_back(x);
            }
            break;
        }
        case FamilyKind::random_subset: {
            if (spec.universe < spec.n)
                throw ConfigError("gen_family: random_subset requires M >= n");
            SplitMix64 rng(spec.seed);
            std::set<long long> picked;
            while (static_cast<long long>(picked.size()) < spec.n)
                picked.insert(rng.range(1, spec.universe));
            for (long long x : picked) v.emplace_back(static_cast<long>(x));
            break;
        }
        case FamilyKind::union_dilate: {
            if (spec.lambda.is_zero())
                throw ConfigError("gen_family: union_dilate lambda must be nonzero");
            for (long long i = 1; i <= spec.n; ++i) {
                Rational base(static_cast<long>(i));
                v.push_back(base);
                v.push_back(base * spec.lambda);
            }
            break;
        }
    }
    return FiniteSet::of(std::move(v));
}

FamilySpec family_from_params(const std::string& kind,
                              const std::map<std::string, std::string>& params,
                              std::uint64_t seed) {
    FamilySpec spec;
    spec.kind = family_kind_from_name(kind);
    spec.seed = seed;
    for (const auto& [key, value] : params) {
        try {
            if (key == "n")
                spec.n = std::stoll(value);
            else if (key == "M")
                spec.universe = std::stoll(value);
            else if (key == "start")
                spec.start = Rational::parse(value);
            else if (key == "step")
                spec.step = Rational::parse(value);
            else if (key == "ratio")
                spec.ratio = Rational::parse(value);
            else if (key == "lambda")
                spec.lambda = Rational::parse(value);
            else
                throw ConfigError("unknown family parameter: " + key);
        } catch (const SyntaxError&) {
            throw ConfigError("bad value for family parameter " + key + ": " + value);
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad value for family parameter " + key + ": " + value);
        } catch (const std::out_of_range&) {
            throw ConfigError("bad value for family parameter " + key + ": " + value);
        }
    }
    return spec;
}

std::vector<FamilySpec> default_verification_specs(int count, long long min_n, long long max_n,
                                                   std::uint64_t seed) {
    if (count < 0 || min_n < 1 || max_n < min_n)
        throw ConfigError("default_verification_specs: bad parameters");
    const Rational steps[4] = {Rational(1), Rational(2), Rational(3), Rational(5, 2)};
    std::vector<FamilySpec> specs;
    specs.reserve(count);
    SplitMix64 seeder(seed);
    long long span = max_n - min_n + 1;
    for (int i = 0; i < count; ++i) {
        FamilySpec s;
        s.n = min_n + (i % span);
        switch (i % 6) {
            case 0:
                s.kind = FamilyKind::interval;
                break;
            case 1:
                s.kind = FamilyKind::arithmetic;
                s.start = Rational(1 + i % 4);
                s.step = steps[i % 4];
                break;
            case 2:
                s.kind = FamilyKind::geometric;
                s.ratio = Rational(2);
                break;
            case 3:
                s.kind = FamilyKind::geometric;
                s.ratio = Rational(3);
                break;
            case 4:
                s.kind = FamilyKind::random_subset;
                s.universe = 10 * s.n;
                s.seed = seeder.next();
                break;
            case 5:
                s.kind = FamilyKind::union_dilate;
                // |A| <= 2 * base size must stay within [min_n, max_n]
                s.n = std::max<long long>(1, s.n / 2);
                s.lambda = Rational(3);
                break;
        }
        specs.push_back(std::move(s));
    }
    return specs;
}

std::vector<FamilySpec> default_survey_specs() {
    std::vector<FamilySpec> specs;
    auto add = [&](FamilyKind kind, long long n, auto&&... tune) {
        FamilySpec s;
        s.kind = kind;
        s.n = n;
        (tune(s), ...);
        specs.push_back(std::move(s));
    };
    for (long long n : {4, 8, 16, 24, 32, 40}) add(FamilyKind::interval, n);
    for (long long n : {4, 8, 16, 24, 32, 40})
        add(FamilyKind::arithmetic, n, [](FamilySpec& s) {
            s.start = Rational(5);
            s.step = Rational(3);
        });
    for (long long n : {3, 6, 9, 12, 15, 18, 21, 24})
        add(FamilyKind::geometric, n, [](FamilySpec& s) { s.ratio = Rational(2); });
    for (long long n : {3, 6, 9, 12, 15, 18})
        add(FamilyKind::geometric, n, [](FamilySpec& s) { s.ratio = Rational(3); });
    for (long long n : {4, 8, 16, 24, 32, 40})
        for (std::uint64_t seed : {1ULL, 2ULL})
            add(FamilyKind::random_subset, n, [&](FamilySpec& s) {
                s.universe = 10 * s.n;
                s.seed = seed;
            });
    for (long long n : {4, 8, 12, 16, 20})
        add(FamilyKind::union_dilate, n, [](FamilySpec& s) { s.lambda = Rational(3); });
    for (long long n : {4, 8, 12, 16, 20})
        add(FamilyKind::union_dilate, n, [](FamilySpec& s) { s.lambda = Rational(1, 2); });
    return specs;
}

}  // namespace addcomb
