#include <doctest.h>

#include "addcomb/checks.hpp"
#include "addcomb/family.hpp"
#include "addcomb/rng.hpp"

using namespace addcomb;

TEST_CASE("check_ungar examples") {
    CheckResult r = check_ungar(FiniteSet::of_integers({1, 2}));
    CHECK(r.holds);
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 2);
    CHECK(r.witness.empty());

    std::vector<Rational> v;
    for (long i = 1; i <= 10; ++i) v.emplace_back(i);
    CheckResult r10 = check_ungar(FiniteSet::of(std::move(v)));
    CHECK(r10.holds);
    CHECK(r10.lhs == 111);
    CHECK(r10.rhs == 98);

    CheckResult r01 = check_ungar(FiniteSet::of_integers({0, 1}));
    CHECK(r01.holds);
    CHECK(r01.lhs == 3);

    CHECK_THROWS_AS(check_ungar(FiniteSet::of_integers({7})), PreconditionError);
}

TEST_CASE("check_balog examples") {
    CheckResult r = check_balog(FiniteSet::of_integers({1, 2}));
    CHECK(r.holds);
    CHECK(r.lhs == 7);
    CHECK(r.rhs == 7);  // equality

    CheckResult r1 = check_balog(FiniteSet::of_integers({1}));
    CHECK(r1.holds);
    CHECK(r1.lhs == 1);
    CHECK(r1.rhs == 1);

    std::vector<Rational> v;
    for (long i = 1; i <= 8; ++i) v.emplace_back(i);
    CHECK(check_balog(FiniteSet::of(std::move(v))).holds);

    CHECK_THROWS_AS(check_balog(FiniteSet::of_integers({0, 1})), PreconditionError);
    CHECK_THROWS_AS(check_balog(FiniteSet::of_integers({-1, 2})), PreconditionError);
    CHECK_THROWS_AS(check_balog(FiniteSet()), PreconditionError);
}

TEST_CASE("check_cauchy_schwarz examples") {
    CheckResult r = check_cauchy_schwarz(FiniteSet::of_integers({1, 2}), CSMode::ratio);
    CHECK(r.holds);
    CHECK(r.lhs == 18);  // E* = 6, |B/B| = 3
    CHECK(r.rhs == 16);

    CheckResult rs = check_cauchy_schwarz(FiniteSet::of({Rational(5, 7)}), CSMode::ratio);
    CHECK(rs.holds);
    CHECK(rs.lhs == 1);
    CHECK(rs.rhs == 1);

    CHECK(check_cauchy_schwarz(FiniteSet::of_integers({1, 2, 4}), CSMode::product).holds);

    CHECK_THROWS_AS(check_cauchy_schwarz(FiniteSet::of_integers({0, 1}), CSMode::ratio),
                    PreconditionError);
    // product mode tolerates zero
    CHECK(check_cauchy_schwarz(FiniteSet::of_integers({0, 1}), CSMode::product).holds);
}

TEST_CASE("exact inequalities hold across the default families") {
    SplitMix64 seeder(107);
    for (const FamilySpec& spec : default_verification_specs(60, 2, 24, seeder.next())) {
        FiniteSet A = gen_family(spec);
        CHECK(check_ungar(A).holds);
        if (A[0].sign() > 0) CHECK(check_balog(A).holds);
        if (!A.contains(Rational(0))) CHECK(check_cauchy_schwarz(A, CSMode::ratio).holds);
        CHECK(check_cauchy_schwarz(A, CSMode::product).holds);
    }
}

TEST_CASE("gp_set") {
    CHECK(gp_set(3) == FiniteSet::of_integers({2, 4, 8}));
    CHECK(gp_set(1) == FiniteSet::of_integers({2}));
    CHECK(gp_set(6) == FiniteSet::of_integers({2, 4, 8, 16, 32, 64}));
    CHECK_THROWS_AS(gp_set(0), PreconditionError);
}

TEST_CASE("octuple_from_quintuple examples") {
    auto o1 = octuple_from_quintuple({2, 2, 2, 2, 2}, 6);
    std::array<long, 8> e1{2, 2, 2, 2, 2, 2, 2, 2};
    CHECK(o1 == e1);

    auto o2 = octuple_from_quintuple({2, 3, 2, 3, 2}, 6);
    std::array<long, 8> e2{2, 3, 2, 3, 2, 3, 2, 3};
    CHECK(o2 == e2);

    auto o3 = octuple_from_quintuple({2, 2, 3, 3, 2}, 6);
    std::array<long, 8> e3{2, 2, 3, 3, 2, 2, 3, 3};
    CHECK(o3 == e3);

    for (const auto& o : {o1, o2, o3}) {
        CHECK(o[0] + o[2] == o[4] + o[6]);
        CHECK(o[0] + o[3] == o[4] + o[7]);
        CHECK(o[1] + o[2] == o[5] + o[6]);
        CHECK(o[1] + o[3] == o[5] + o[7]);
        for (long v : o) {
            CHECK(v >= 1);
            CHECK(v <= 6);
        }
    }

    CHECK_THROWS_AS(octuple_from_quintuple({1, 2, 2, 2, 2}, 6), PreconditionError);  // below third
    CHECK_THROWS_AS(octuple_from_quintuple({4, 2, 2, 2, 2}, 6), PreconditionError);  // above third
    CHECK_THROWS_AS(octuple_from_quintuple({2, 2, 2, 2, 2}, 7), PreconditionError);  // n % 3 != 0
}

TEST_CASE("check_gp_energy") {
    CheckResult r3 = check_gp_energy(3);
    CHECK(r3.holds);
    CHECK(r3.rhs == 1);
    CHECK(r3.lhs == 86);  // exact E* of the 6-element sumset

    CheckResult r6 = check_gp_energy(6);
    CHECK(r6.holds);
    CHECK(r6.rhs == 32);
    CHECK(r6.lhs == 2309);

    CheckResult r9 = check_gp_energy(9);
    CHECK(r9.holds);
    CHECK(r9.rhs == 243);
    CHECK(r9.lhs == 15425);

    CHECK_THROWS_AS(check_gp_energy(4), PreconditionError);
    CHECK_THROWS_AS(check_gp_energy(0), PreconditionError);
}

TEST_CASE("sidon octuple correspondence: E*(A+A) equals the normalized octuple count") {
    // One octuple per value quadruple: exponents nondecreasing within each
    // pair, unique by the Sidon property.
    CHECK(gp_octuple_energy(3) == mult_energy(sumset(gp_set(3), gp_set(3))));
    CHECK(gp_octuple_energy(6) == mult_energy(sumset(gp_set(6), gp_set(6))));
    CHECK(gp_octuple_energy(3) == 86);
    CHECK(gp_octuple_energy(6) == 2309);
}

TEST_CASE("E*(A+A) via representation counting matches brute force for gp sets") {
    for (int n : {3, 6}) {
        FiniteSet S = sumset(gp_set(n), gp_set(n));
        CHECK(mult_energy(S) == energy_bruteforce(S, EnergyMode::product));
    }
}

TEST_CASE("structural_probe examples") {
    std::vector<Rational> v;
    for (long i = 1; i <= 4; ++i) v.emplace_back(i);
    ProbeRecord p4 = structural_probe(FiniteSet::of(std::move(v)));
    CHECK(p4.n == 4);
    CHECK(p4.card_sumset == 7);
    CHECK(p4.card_ratio_of_sumsets == 35);
    CHECK(p4.growth_sumset == Rational(7, 4));
    CHECK(p4.density_ratioset == Rational(35, 16));

    ProbeRecord p12 = structural_probe(FiniteSet::of_integers({1, 2}));
    CHECK(p12.card_a_times_4a == 9);  // {4..8} * {1,2} = {4,5,6,7,8,10,12,14,16}

    ProbeRecord pgp = structural_probe(gp_set(6));
    CHECK(*pgp.energy_mult_sumset >= 32);
    CHECK(*pgp.energy_mult_sumset == 2309);

    CHECK_THROWS_AS(structural_probe(FiniteSet::of_integers({1})), PreconditionError);
}

TEST_CASE("probe sanity: derived cardinalities obey set algebra") {
    SplitMix64 seeder(109);
    for (const FamilySpec& spec : default_verification_specs(30, 2, 16, seeder.next())) {
        FiniteSet A = gen_family(spec);
        ProbeRecord p = structural_probe(A);
        REQUIRE(p.card_sumset);
        REQUIRE(p.card_diffset);
        CHECK(*p.card_ratio_of_sumsets <= *p.card_sumset * *p.card_sumset);
        CHECK(*p.card_prod_of_diffsets <= *p.card_diffset * *p.card_diffset);
        Env env{{"A", A}};
        long long card_4a = static_cast<long long>(
            eval_cardinality(*parse_expr("A+A+A+A"), env));
        CHECK(*p.card_a_times_4a <= static_cast<long long>(A.size()) * card_4a);
        CHECK(*p.card_sumset >= 1);
    }
}

TEST_CASE("probe capacity policy") {
    std::vector<Rational> v;
    for (long i = 1; i <= 40; ++i) v.emplace_back(i);
    FiniteSet A = FiniteSet::of(std::move(v));
    EvalLimits tiny{100, 100};
    CHECK_THROWS_AS(structural_probe(A, tiny, /*throw_on_capacity=*/true), CapacityError);
    ProbeRecord lenient = structural_probe(A, tiny, /*throw_on_capacity=*/false);
    CHECK(!lenient.flags.empty());
    CHECK(!lenient.card_sumset);  // 1600 pairs over the 100-pair budget
}
