#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "addcomb/checks.hpp"
#include "addcomb/family.hpp"

namespace addcomb {

// Environment variable overriding SurveyConfig::memory_budget.
inline constexpr const char* kMemBudgetEnvVar = "ADDCOMB_MEM_BUDGET";

struct SurveyConfig {
    std::vector<FamilySpec> families;
    std::vector<std::string> expressions;  // extra single-variable (A) measurements
    Rational c{1};        // Conjecture-probe ratio-set threshold: |(A+A)/(A+A)| <= c|A|^2
    Rational c_prime{4};  // sum-set threshold: flag when additionally |A+A| > c'|A|
    std::string output = "survey_out";  // writes <output>.csv and <output>.json
    std::size_t memory_budget = 10'000'000;
};

SurveyConfig default_survey_config();

// Parses and validates a config (expressions must parse and use only the
// variable A; thresholds must be positive). Throws ConfigError.
SurveyConfig survey_config_from_json(const nlohmann::json& j);
SurveyConfig load_survey_config(const std::string& path);

// Applies the ADDCOMB_MEM_BUDGET override, if set.
void apply_env_overrides(SurveyConfig& config);

struct SurveyRow {
    FamilySpec spec;
    ProbeRecord probe;
    // "true" / "false" / "skip"; a "false" anywhere is an implementation
    // bug, and the survey run reports failure.
    std::string ungar_ok, balog_ok, cs_ok;
    std::map<std::string, long long> extras;  // extra expression cardinalities
    std::vector<std::string> flags;

    bool hard_check_failed() const {
        return ungar_ok == "false" || balog_ok == "false" || cs_ok == "false";
    }
};

// One row per family, in config order; per-set capacity errors are
// recorded in the row's flags rather than aborting the run.
std::vector<SurveyRow> run_survey(const SurveyConfig& config);

// Indices of rows with |(A+A)/(A+A)| <= c|A|^2 yet |A+A| > c'|A| —
// counterexample candidates for human review.
std::vector<std::size_t> conjecture_probe(const std::vector<SurveyRow>& rows, const Rational& c,
                                          const Rational& c_prime);

std::string survey_csv_header();
// Deterministic: identical configs yield byte-identical bodies.
std::string survey_csv_body(const std::vector<SurveyRow>& rows);
nlohmann::json survey_rows_json(const std::vector<SurveyRow>& rows);

// Writes <output>.csv (timestamped comment line, then header and body)
// and the <output>.json mirror.
void write_survey_outputs(const SurveyConfig& config, const std::vector<SurveyRow>& rows);

}  // namespace addcomb
