#include "addcomb/survey.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

#include "addcomb/errors.hpp"

namespace addcomb {

SurveyConfig default_survey_config() {
    SurveyConfig config;
    config.families = default_survey_specs();
    return config;
}

namespace {

Rational rational_from_json(const nlohmann::json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const SyntaxError&) {
    } catch (const ZeroDenominatorError&) {
    }
    throw ConfigError(what + ": expected an integer or a rational string like \"3/2\"");
}

FamilySpec family_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("family spec must be an object with a \"kind\"");
    FamilySpec spec;
    spec.kind = family_kind_from_name(j.at("kind").get<std::string>());
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") continue;
        if (key == "n")
            spec.n = value.get<long long>();
        else if (key == "M")
            spec.universe = value.get<long long>();
        else if (key == "seed")
            spec.seed = value.get<std::uint64_t>();
        else if (key == "start")
            spec.start = rational_from_json(value, "start");
        else if (key == "step")
            spec.step = rational_from_json(value, "step");
        else if (key == "ratio")
            spec.ratio = rational_from_json(value, "ratio");
        else if (key == "lambda")
            spec.lambda = rational_from_json(value, "lambda");
        else
            throw ConfigError("unknown family field: " + key);
    }
    return spec;
}

}  // namespace

SurveyConfig survey_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("survey config must be a JSON object");
    SurveyConfig config;
    config.families.clear();
    if (j.contains("families"))
        for (const auto& f : j.at("families")) config.families.push_back(family_spec_from_json(f));
    if (j.contains("expressions"))
        for (const auto& e : j.at("expressions")) {
            std::string src = e.get<std::string>();
            try {
                auto ast = parse_expr(src);
                for (const auto& var : expr_variables(*ast))
                    if (var != "A")
                        throw ConfigError("survey expressions may only use the variable A: " + src);
            } catch (const SyntaxError& err) {
                throw ConfigError("bad survey expression \"" + src + "\": " + err.what());
            }
            config.expressions.push_back(std::move(src));
        }
    if (j.contains("c")) config.c = rational_from_json(j.at("c"), "c");
    if (j.contains("c_prime")) config.c_prime = rational_from_json(j.at("c_prime"), "c_prime");
    if (config.c.sign() <= 0 || config.c_prime.sign() <= 0)
        throw ConfigError("thresholds c and c_prime must be positive");
    if (j.contains("output")) config.output = j.at("output").get<std::string>();
    if (j.contains("memory_budget")) {
        long long budget = j.at("memory_budget").get<long long>();
        if (budget < 1) throw ConfigError("memory_budget must be positive");
        config.memory_budget = static_cast<std::size_t>(budget);
    }
    return config;
}

SurveyConfig load_survey_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open survey config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in " + path + ": " + e.what());
    }
    return survey_config_from_json(j);
}

void apply_env_overrides(SurveyConfig& config) {
    if (const char* value = std::getenv(kMemBudgetEnvVar)) {
        char* end = nullptr;
        long long budget = std::strtoll(value, &end, 10);
        if (end == value || *end != '\0' || budget < 1)
            throw ConfigError(std::string(kMemBudgetEnvVar) + " must be a positive integer");
        config.memory_budget = static_cast<std::size_t>(budget);
    }
}

namespace {

std::string run_checked(const FiniteSet& A, std::vector<std::string>& flags,
                        const std::string& tag, bool (*check)(const FiniteSet&)) {
    try {
        return check(A) ? "true" : "false";
    } catch (const CapacityError&) {
        flags.push_back("capacity:" + tag);
        return "skip";
    }
}

}  // namespace

std::vector<SurveyRow> run_survey(const SurveyConfig& config) {
    EvalLimits limits{config.memory_budget, config.memory_budget};
    std::vector<SurveyRow> rows;
    rows.reserve(config.families.size());

    for (const FamilySpec& spec : config.families) {
        SurveyRow row;
        row.spec = spec;
        FiniteSet A = gen_family(spec);
        row.probe = structural_probe(A, limits, /*throw_on_capacity=*/false);
        row.flags = row.probe.flags;

        if (A.size() >= 2)
            row.ungar_ok = run_checked(A, row.flags, "ungar",
                                       [](const FiniteSet& S) { return check_ungar(S).holds; });
        else
            row.ungar_ok = "skip";

        if (!A.empty() && A[0].sign() > 0)
            row.balog_ok = run_checked(A, row.flags, "balog",
                                       [](const FiniteSet& S) { return check_balog(S).holds; });
        else
            row.balog_ok = "skip";

        row.cs_ok = run_checked(A, row.flags, "cauchy-schwarz", [](const FiniteSet& S) {
            FiniteSet B = sumset(S, S);
            CSMode mode = B.contains(Rational(0)) ? CSMode::product : CSMode::ratio;
            return check_cauchy_schwarz(B, mode).holds;
        });

        for (const std::string& src : config.expressions) {
            auto ast = parse_expr(src);
            try {
                Env env{{"A", A}};
                row.extras[src] = static_cast<long long>(eval_cardinality(*ast, env, limits));
            } catch (const CapacityError&) {
                row.flags.push_back("capacity:" + src);
            }
        }

        if (row.probe.card_ratio_of_sumsets && row.probe.card_sumset) {
            Rational nn(static_cast<long>(row.probe.n));
            bool small_ratio_set =
                Rational(static_cast<long>(*row.probe.card_ratio_of_sumsets)) <= config.c * nn * nn;
            bool large_sumset =
                Rational(static_cast<long>(*row.probe.card_sumset)) > config.c_prime * nn;
            if (small_ratio_set && large_sumset) row.flags.push_back("conjecture_candidate");
        }

        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::size_t> conjecture_probe(const std::vector<SurveyRow>& rows, const Rational& c,
                                          const Rational& c_prime) {
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& p = rows[i].probe;
        if (!p.card_ratio_of_sumsets || !p.card_sumset) continue;
        Rational nn(static_cast<long>(p.n));
        if (Rational(static_cast<long>(*p.card_ratio_of_sumsets)) <= c * nn * nn &&
            Rational(static_cast<long>(*p.card_sumset)) > c_prime * nn)
            flagged.push_back(i);
    }
    return flagged;
}

std::string survey_csv_header() {
    return "family,seed,n,card_sumset,card_diffset,card_ratio_of_sumsets,"
           "card_prod_of_diffsets,card_a_times_4a,energy_mult_sumset,"
           "ungar_ok,balog_ok,cs_ok,flags";
}

namespace {

std::string opt_str(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : "NA";
}

std::string joined_flags(const std::vector<std::string>& flags) {
    std::string s;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (i) s += ';';
        s += flags[i];
    }
    return s;
}

}  // namespace

std::string survey_csv_body(const std::vector<SurveyRow>& rows) {
    std::string out;
    for (const SurveyRow& row : rows) {
        out += row.spec.label();
        out += ',' + std::to_string(row.spec.seed);
        out += ',' + std::to_string(row.probe.n);
        out += ',' + opt_str(row.probe.card_sumset);
        out += ',' + opt_str(row.probe.card_diffset);
        out += ',' + opt_str(row.probe.card_ratio_of_sumsets);
        out += ',' + opt_str(row.probe.card_prod_of_diffsets);
        out += ',' + opt_str(row.probe.card_a_times_4a);
        out += ',';
        out += row.probe.energy_mult_sumset ? row.probe.energy_mult_sumset->get_str() : "NA";
        out += ',' + row.ungar_ok;
        out += ',' + row.balog_ok;
        out += ',' + row.cs_ok;
        out += ',' + joined_flags(row.flags);
        out += '\n';
    }
    return out;
}

nlohmann::json survey_rows_json(const std::vector<SurveyRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SurveyRow& row : rows) {
        nlohmann::json r;
        r["family"] = row.spec.label();
        r["seed"] = row.spec.seed;
        r["n"] = row.probe.n;
        auto put = [&](const char* key, const std::optional<long long>& v) {
            if (v)
                r[key] = *v;
            else
                r[key] = nullptr;
        };
        put("card_sumset", row.probe.card_sumset);
        put("card_diffset", row.probe.card_diffset);
        put("card_ratio_of_sumsets", row.probe.card_ratio_of_sumsets);
        put("card_prod_of_diffsets", row.probe.card_prod_of_diffsets);
        put("card_a_times_4a", row.probe.card_a_times_4a);
        if (row.probe.energy_mult_sumset)
            r["energy_mult_sumset"] = row.probe.energy_mult_sumset->get_str();
        else
            r["energy_mult_sumset"] = nullptr;
        r["ungar_ok"] = row.ungar_ok;
        r["balog_ok"] = row.balog_ok;
        r["cs_ok"] = row.cs_ok;
        r["flags"] = joined_flags(row.flags);
        if (!row.extras.empty()) {
            nlohmann::json extras;
            for (const auto& [expr, card] : row.extras) extras[expr] = card;
            r["extras"] = extras;
        }
        arr.push_back(std::move(r));
    }
    return arr;
}

void write_survey_outputs(const SurveyConfig& config, const std::vector<SurveyRow>& rows) {
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));

    std::ofstream csv(config.output + ".csv");
    if (!csv) throw ConfigError("cannot write " + config.output + ".csv");
    csv << "# generated " << stamp << "\n" << survey_csv_header() << "\n"
        << survey_csv_body(rows);

    nlohmann::json j;
    j["generated"] = stamp;
    j["c"] = config.c.str();
    j["c_prime"] = config.c_prime.str();
    j["rows"] = survey_rows_json(rows);
    std::ofstream json_out(config.output + ".json");
    if (!json_out) throw ConfigError("cannot write " + config.output + ".json");
    json_out << j.dump(2) << "\n";
}

}  // namespace addcomb
