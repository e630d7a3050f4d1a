// addcomb: exact-arithmetic workbench for sum, difference, product and
// ratio sets, their energies, and the structured searches around them.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "addcomb/checks.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/expr.hpp"
#include "addcomb/incidence.hpp"
#include "addcomb/sunit.hpp"
#include "addcomb/survey.hpp"

using namespace addcomb;
using nlohmann::json;

namespace {

FiniteSet load_set(const std::string& path) {
    std::size_t dropped = 0;
    FiniteSet s = read_set_file(path, &dropped);
    if (dropped > 0)
        std::cerr << "warning: dropped " << dropped << " duplicate value(s) from " << path
                  << "\n";
    return s;
}

std::size_t memory_budget_from_env() {
    SurveyConfig tmp;
    apply_env_overrides(tmp);
    return tmp.memory_budget;
}

json check_to_json(const CheckResult& r) {
    json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs.get_str();
    j["rhs"] = r.rhs.get_str();
    j["holds"] = r.holds;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

void emit_check(const CheckResult& r, bool as_json, int& failures) {
    if (!r.holds) ++failures;
    if (as_json)
        std::cout << check_to_json(r).dump() << "\n";
    else
        std::cout << r.line() << "\n";
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value, got: " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

int cmd_eval(const std::string& expr_text, const std::vector<std::string>& bindings,
             bool count_only) {
    auto ast = parse_expr(expr_text);
    Env env;
    for (const std::string& b : bindings) {
        std::size_t eq = b.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected --set name=file, got: " + b);
        env[b.substr(0, eq)] = load_set(b.substr(eq + 1));
    }
    EvalLimits limits{memory_budget_from_env(), memory_budget_from_env()};
    if (count_only) {
        std::cout << eval_cardinality(*ast, env, limits) << "\n";
        return 0;
    }
    FiniteSet result = eval_expr(*ast, env, limits);
    std::cout << "# " << format_expr(*ast) << "  |S| = " << result.size() << "\n";
    write_set(std::cout, result);
    return 0;
}

int cmd_energy(const std::string& path, const std::string& mode_name, bool brute) {
    FiniteSet A = load_set(path);
    EnergyMode mode = mode_name == "sum" ? EnergyMode::sum : EnergyMode::product;
    Integer e = brute ? energy_bruteforce(A, mode)
                      : (mode == EnergyMode::sum ? add_energy(A) : mult_energy(A));
    std::cout << e.get_str() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int n_cap, bool as_json) {
    int failures = 0;
    bool all = suite == "all";

    if (all || suite == "balog") {
        int n_max = n_cap > 0 ? n_cap : 50;
        for (int n = 1; n <= n_max; ++n) {
            FamilySpec spec{FamilyKind::interval, n};
            CheckResult r = check_balog(gen_family(spec));
            r.name += " interval(n=" + std::to_string(n) + ")";
            emit_check(r, as_json, failures);
        }
    }
    if (all || suite == "ungar") {
        int n_max = n_cap > 0 ? n_cap : 40;
        for (const FamilySpec& spec : default_verification_specs(200, 2, n_max, 20260801)) {
            CheckResult r = check_ungar(gen_family(spec));
            r.name += " " + spec.label();
            emit_check(r, as_json, failures);
        }
    }
    if (all || suite == "cs") {
        int n_max = n_cap > 0 ? n_cap : 30;
        for (const FamilySpec& spec : default_verification_specs(200, 1, n_max, 20260802)) {
            FiniteSet B = gen_family(spec);
            if (B.contains(Rational(0))) continue;
            for (CSMode mode : {CSMode::ratio, CSMode::product}) {
                CheckResult r = check_cauchy_schwarz(B, mode);
                r.name += " " + spec.label();
                emit_check(r, as_json, failures);
            }
        }
    }
    if (all || suite == "gp") {
        int n_max = n_cap > 0 ? n_cap : 12;
        for (int n = 3; n <= n_max; n += 3) {
            CheckResult r = check_gp_energy(n);
            emit_check(r, as_json, failures);
        }
    }
    if (failures > 0) {
        std::cerr << failures << " check(s) failed\n";
        return 1;
    }
    return 0;
}

int cmd_construct(const std::string& family, const std::string& params, std::uint64_t seed) {
    FamilySpec spec = family_from_params(family, parse_kv(params), seed);
    FiniteSet A = gen_family(spec);
    std::cout << "# " << spec.label() << "  |A| = " << A.size() << "\n";
    write_set(std::cout, A);
    return 0;
}

int cmd_sunit(const std::string& set_path, const std::string& generators, long long prune_t,
              const std::string& paths_arg) {
    FiniteSet A = load_set(set_path);
    std::vector<Rational> gens;
    std::size_t pos = 0;
    while (pos <= generators.size()) {
        std::size_t comma = generators.find(',', pos);
        std::string item = generators.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? generators.size() + 1 : comma + 1;
        if (!item.empty()) gens.push_back(Rational::parse(item));
    }
    if (gens.empty()) throw ConfigError("--generators must list at least one rational");

    GroupSpec spec(gens);
    DiffGraph g = build_diff_graph(A, spec);

    json out;
    out["vertices"] = g.size();
    out["edges"] = g.edge_count;
    out["ordered_pair_count"] = g.ordered_pair_count();
    out["min_degree"] = g.size() ? g.min_degree() : 0;
    auto histogram = [](const DiffGraph& gr) {
        std::map<int, long long> h;
        for (std::size_t v = 0; v < gr.size(); ++v) ++h[gr.degree(static_cast<int>(v))];
        json j;
        for (const auto& [deg, count] : h) j[std::to_string(deg)] = count;
        return j;
    };
    out["degree_histogram"] = histogram(g);

    const DiffGraph* active = &g;
    DiffGraph pruned;
    if (prune_t >= 0) {
        pruned = prune_min_degree(g, prune_t);
        json p;
        p["threshold"] = prune_t;
        p["vertices"] = pruned.size();
        p["edges"] = pruned.edge_count;
        p["ordered_pair_count"] = pruned.ordered_pair_count();
        p["degree_histogram"] = histogram(pruned);
        out["pruned"] = p;
        active = &pruned;
    }

    if (!paths_arg.empty()) {
        std::size_t comma = paths_arg.find(',');
        if (comma == std::string::npos)
            throw ConfigError("--paths expects <source-index>,<k>");
        int v = std::stoi(paths_arg.substr(0, comma));
        int k = std::stoi(paths_arg.substr(comma + 1));
        PathCounts counts = count_nondeg_paths(*active, v, k);
        json p;
        p["source"] = v;
        p["k"] = k;
        p["total"] = counts.total;
        json per;
        for (std::size_t w = 0; w < counts.per_endpoint.size(); ++w)
            if (counts.per_endpoint[w] > 0) per[std::to_string(w)] = counts.per_endpoint[w];
        p["per_endpoint"] = per;
        p["lower_bound_min_degree"] =
            path_count_lower_bound(active->size() ? active->min_degree() : 0, k).get_str();
        out["paths"] = p;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_incidence(const std::string& a_path, const std::string& b_path,
                  const std::string& c_path) {
    ElekesReport rep =
        check_elekes_construction(load_set(a_path), load_set(b_path), load_set(c_path));
    json j;
    j["holds"] = rep.holds;
    j["points"] = rep.points;
    j["lines"] = rep.lines;
    j["incidences"] = rep.incidences;
    j["min_line_incidences"] = rep.min_line_incidences;
    j["incidence_lower_bound"] = rep.incidence_lower_bound;
    j["card_a_bc"] = rep.card_a_bc;
    j["ratio"] = rep.ratio;
    j["st_bound_c2.5"] = rep.st_bound_report;
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    std::cout << j.dump(2) << "\n";
    return rep.holds ? 0 : 1;
}

int cmd_survey(const std::string& config_path, const std::string& output_override) {
    SurveyConfig config =
        config_path.empty() ? default_survey_config() : load_survey_config(config_path);
    apply_env_overrides(config);
    if (!output_override.empty()) config.output = output_override;

    std::vector<SurveyRow> rows = run_survey(config);
    write_survey_outputs(config, rows);

    int failures = 0;
    for (const SurveyRow& row : rows)
        if (row.hard_check_failed()) {
            ++failures;
            std::cerr << "hard check failed on " << row.spec.label() << "\n";
        }
    auto flagged = conjecture_probe(rows, config.c, config.c_prime);
    std::cout << rows.size() << " rows -> " << config.output << ".csv, " << config.output
              << ".json\n";
    if (flagged.empty()) {
        std::cout << "conjecture probe: no candidates (c=" << config.c.str()
                  << ", c'=" << config.c_prime.str() << ")\n";
    } else {
        std::cout << "conjecture probe: " << flagged.size() << " candidate(s) for review:\n";
        for (std::size_t i : flagged) std::cout << "  " << rows[i].spec.label() << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"addcomb: exact set arithmetic, energies, and extremal-structure probes"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a set expression over named sets");
    std::string expr_text;
    std::vector<std::string> bindings;
    bool count_only = false;
    eval_cmd->add_option("--expr", expr_text, "expression, e.g. \"(A+A)/(A+A)\"")->required();
    eval_cmd->add_option("--set", bindings, "binding name=file (repeatable)");
    eval_cmd->add_flag("--count", count_only, "print only the cardinality");

    auto* energy_cmd = app.add_subcommand("energy", "multiplicative/additive energy of a set");
    std::string energy_set, energy_mode = "product";
    bool brute = false;
    energy_cmd->add_option("--set", energy_set, "set file")->required();
    energy_cmd->add_option("--mode", energy_mode, "sum|product (default product)")
        ->check(CLI::IsMember({"sum", "product"}));
    energy_cmd->add_flag("--brute", brute, "use the O(n^4) oracle (|A| <= 64)");

    auto* verify_cmd = app.add_subcommand("verify", "run the exact inequality suites");
    std::string suite = "all";
    int n_cap = 0;
    bool as_json = false;
    verify_cmd->add_option("--suite", suite, "all|ungar|balog|cs|gp")
        ->check(CLI::IsMember({"all", "ungar", "balog", "cs", "gp"}));
    verify_cmd->add_option("--n", n_cap, "size cap override");
    verify_cmd->add_flag("--json", as_json, "emit one JSON object per line");

    auto* construct_cmd = app.add_subcommand("construct", "generate a family set");
    std::string family, params;
    std::uint64_t seed = 0;
    construct_cmd
        ->add_option("--family", family, "interval|arithmetic|geometric|random_subset|union_dilate")
        ->required();
    construct_cmd->add_option("--params", params, "comma list, e.g. n=10,ratio=2");
    construct_cmd->add_option("--seed", seed, "seed for random kinds");

    auto* sunit_cmd = app.add_subcommand("sunit", "difference graph over a multiplicative group");
    std::string sunit_set, sunit_gens, paths_arg;
    long long prune_t = -1;
    sunit_cmd->add_option("--set", sunit_set, "set file")->required();
    sunit_cmd->add_option("--generators", sunit_gens, "comma-separated rationals")->required();
    sunit_cmd->add_option("--prune", prune_t, "prune to minimum degree t");
    sunit_cmd->add_option("--paths", paths_arg,
                          "source,k: count nondegenerate k-edge walks (after any pruning)");

    auto* incidence_cmd =
        app.add_subcommand("incidence", "Elekes line/grid construction check");
    std::string a_path, b_path, c_path;
    incidence_cmd->add_option("--A", a_path, "set file")->required();
    incidence_cmd->add_option("--B", b_path, "set file")->required();
    incidence_cmd->add_option("--C", c_path, "set file")->required();

    auto* survey_cmd = app.add_subcommand("survey", "run a measurement survey");
    std::string config_path, output_override;
    survey_cmd->add_option("--config", config_path, "JSON config (defaults built in)");
    survey_cmd->add_option("--output", output_override, "override the output base path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(eval_cmd)) return cmd_eval(expr_text, bindings, count_only);
        if (app.got_subcommand(energy_cmd)) return cmd_energy(energy_set, energy_mode, brute);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(suite, n_cap, as_json);
        if (app.got_subcommand(construct_cmd)) return cmd_construct(family, params, seed);
        if (app.got_subcommand(sunit_cmd))
            return cmd_sunit(sunit_set, sunit_gens, prune_t, paths_arg);
        if (app.got_subcommand(incidence_cmd)) return cmd_incidence(a_path, b_path, c_path);
        if (app.got_subcommand(survey_cmd)) return cmd_survey(config_path, output_override);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
