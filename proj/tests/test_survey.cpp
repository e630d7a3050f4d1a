#include <doctest.h>

#include <cstdlib>

#include "addcomb/survey.hpp"

using namespace addcomb;

TEST_CASE("gen_family examples") {
    FamilySpec interval{FamilyKind::interval, 5};
    CHECK(gen_family(interval) == FiniteSet::of_integers({1, 2, 3, 4, 5}));

    FamilySpec geo{FamilyKind::geometric, 3};
    geo.ratio = Rational(2);
    CHECK(gen_family(geo) == FiniteSet::of_integers({2, 4, 8}));

    FamilySpec forced{FamilyKind::random_subset, 3};
    forced.universe = 3;
    forced.seed = 998877;
    CHECK(gen_family(forced) == FiniteSet::of_integers({1, 2, 3}));

    FamilySpec ap{FamilyKind::arithmetic, 4};
    ap.start = Rational(5);
    ap.step = Rational(3, 2);
    CHECK(gen_family(ap) == FiniteSet::of({Rational(5), Rational(13, 2), Rational(8),
                                           Rational(19, 2)}));

    FamilySpec ud{FamilyKind::union_dilate, 4};
    ud.lambda = Rational(3);
    CHECK(gen_family(ud) == FiniteSet::of_integers({1, 2, 3, 4, 6, 9, 12}));

    FamilySpec bad{FamilyKind::random_subset, 10};
    bad.universe = 5;
    CHECK_THROWS_AS(gen_family(bad), ConfigError);
    FamilySpec zero_step{FamilyKind::arithmetic, 3};
    zero_step.step = Rational(0);
    CHECK_THROWS_AS(gen_family(zero_step), ConfigError);
}

TEST_CASE("identical (spec, seed) generates the identical set; seeds matter") {
    FamilySpec spec{FamilyKind::random_subset, 12};
    spec.universe = 120;
    spec.seed = 42;
    FiniteSet a = gen_family(spec), b = gen_family(spec);
    CHECK(a == b);
    CHECK(a.size() == 12);
    spec.seed = 43;
    CHECK(!(gen_family(spec) == a));
}

TEST_CASE("interval sumset and diffset closed forms") {
    for (long long n = 1; n <= 100; ++n) {
        FamilySpec spec{FamilyKind::interval, n};
        FiniteSet A = gen_family(spec);
        CHECK(sumset(A, A).size() == static_cast<std::size_t>(2 * n - 1));
        CHECK(diffset(A, A).size() == static_cast<std::size_t>(2 * n - 1));
    }
}

TEST_CASE("survey config json") {
    nlohmann::json j = nlohmann::json::parse(R"json({
        "families": [
            {"kind": "interval", "n": 4},
            {"kind": "geometric", "n": 6, "ratio": "3"},
            {"kind": "random_subset", "n": 8, "M": 80, "seed": 7},
            {"kind": "union_dilate", "n": 5, "lambda": "1/2"}
        ],
        "expressions": ["(A-A)/(A-A)"],
        "c": 1, "c_prime": "4",
        "output": "tmp_survey",
        "memory_budget": 500000
    })json");
    SurveyConfig config = survey_config_from_json(j);
    CHECK(config.families.size() == 4);
    CHECK(config.families[1].ratio == Rational(3));
    CHECK(config.families[3].lambda == Rational(1, 2));
    CHECK(config.expressions.size() == 1);
    CHECK(config.memory_budget == 500000);

    CHECK_THROWS_AS(survey_config_from_json(nlohmann::json::parse(R"json({"c": "0"})json")), ConfigError);
    CHECK_THROWS_AS(
        survey_config_from_json(nlohmann::json::parse(R"json({"expressions": ["A+*A"]})json")),
        ConfigError);
    CHECK_THROWS_AS(
        survey_config_from_json(nlohmann::json::parse(R"json({"expressions": ["A+B"]})json")),
        ConfigError);
    CHECK_THROWS_AS(
        survey_config_from_json(nlohmann::json::parse(R"json({"families": [{"kind": "nope"}]})json")),
        ConfigError);
}

TEST_CASE("run_survey basics") {
    SurveyConfig config;
    config.families.clear();

    // empty family list: empty output, success
    CHECK(run_survey(config).empty());
    CHECK(survey_csv_body({}).empty());

    FamilySpec spec{FamilyKind::interval, 2};
    config.families.push_back(spec);
    auto rows = run_survey(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].probe.card_sumset == 3);
    CHECK(rows[0].probe.card_ratio_of_sumsets == 7);  // matches the balog example
    CHECK(rows[0].ungar_ok == "true");
    CHECK(rows[0].balog_ok == "true");
    CHECK(rows[0].cs_ok == "true");
    CHECK(!rows[0].hard_check_failed());

    FamilySpec gp{FamilyKind::geometric, 6};
    gp.ratio = Rational(2);
    config.families = {gp};
    auto gp_rows = run_survey(config);
    REQUIRE(gp_rows.size() == 1);
    CHECK(*gp_rows[0].probe.energy_mult_sumset >= 32);
}

TEST_CASE("survey rows record capacity errors without aborting") {
    SurveyConfig config;
    config.families.clear();
    FamilySpec big{FamilyKind::interval, 60};
    config.families.push_back(big);
    FamilySpec small{FamilyKind::interval, 3};
    config.families.push_back(small);
    config.memory_budget = 2000;  // 60*60 = 3600 pairs exceeds this

    auto rows = run_survey(config);
    REQUIRE(rows.size() == 2);
    CHECK(!rows[0].flags.empty());
    CHECK(!rows[0].probe.card_sumset);
    CHECK(rows[1].flags.empty());
    CHECK(rows[1].probe.card_sumset == 5);

    // the failing quantity shows up as NA in the CSV body
    std::string body = survey_csv_body(rows);
    CHECK(body.find("NA") != std::string::npos);
    CHECK(body.find("capacity:") != std::string::npos);
}

TEST_CASE("conjecture_probe") {
    // intervals never trigger: |A+A| = 2n-1 <= 4n
    SurveyConfig config;
    config.families.clear();
    for (long long n : {2, 5, 9}) config.families.push_back(FamilySpec{FamilyKind::interval, n});
    auto rows = run_survey(config);
    CHECK(conjecture_probe(rows, Rational(1), Rational(4)).empty());

    // a synthetic record crossing both thresholds is flagged
    SurveyRow synthetic;
    synthetic.probe.n = 4;
    synthetic.probe.card_ratio_of_sumsets = 16;
    synthetic.probe.card_sumset = 17;
    rows.push_back(synthetic);
    auto flagged = conjecture_probe(rows, Rational(1), Rational(4));
    REQUIRE(flagged.size() == 1);
    CHECK(flagged[0] == 3);

    CHECK(conjecture_probe({}, Rational(1), Rational(4)).empty());
}

TEST_CASE("csv header is the pinned schema") {
    CHECK(survey_csv_header() ==
          "family,seed,n,card_sumset,card_diffset,card_ratio_of_sumsets,card_prod_of_diffsets,"
          "card_a_times_4a,energy_mult_sumset,ungar_ok,balog_ok,cs_ok,flags");
}

TEST_CASE("csv bodies are byte-identical across runs") {
    SurveyConfig config;
    config.families = {FamilySpec{FamilyKind::interval, 6}};
    FamilySpec rnd{FamilyKind::random_subset, 10};
    rnd.universe = 100;
    rnd.seed = 5;
    config.families.push_back(rnd);
    config.expressions = {"(A-A)/(A-A)"};

    std::string one = survey_csv_body(run_survey(config));
    std::string two = survey_csv_body(run_survey(config));
    CHECK(one == two);
    CHECK(one.find("interval(n=6)") == 0);

    nlohmann::json j1 = survey_rows_json(run_survey(config));
    CHECK(j1.size() == 2);
    CHECK(j1[0]["card_sumset"] == 11);
    CHECK(j1[0]["extras"]["(A-A)/(A-A)"] == 39);
}

TEST_CASE("memory budget env override") {
    SurveyConfig config;
    setenv(kMemBudgetEnvVar, "12345", 1);
    apply_env_overrides(config);
    CHECK(config.memory_budget == 12345);
    setenv(kMemBudgetEnvVar, "bogus", 1);
    CHECK_THROWS_AS(apply_env_overrides(config), ConfigError);
    unsetenv(kMemBudgetEnvVar);
    SurveyConfig untouched;
    apply_env_overrides(untouched);
    CHECK(untouched.memory_budget == 10'000'000);
}
