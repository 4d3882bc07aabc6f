// Command-line surface: algebra info, theorem verification, identity
// suite, and the dimension table, with JSON/CSV/text reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invtensor/identities.hpp"
#include "invtensor/invariant_space.hpp"
#include "invtensor/report.hpp"
#include "invtensor/symmetric_invariants.hpp"

namespace {

using namespace invtensor;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitConfigError = 2;

std::vector<u64> parse_primes(const std::string& csv)
{
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stoull(item));
    }
    if (out.size() < 2)
        throw BadPrime("need at least two primes, got '" + csv + "'");
    return out;
}

std::vector<u64> primes_from_env_or(std::vector<u64> fallback)
{
    if (const char* env = std::getenv("INVTENSOR_PRIMES"))
        return parse_primes(env);
    return fallback;
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw Error("cannot open output file " + out_path);
    f << content;
}

struct CommonArgs {
    std::string family = "A";
    int rank = 1;
    int degree_min = 1;
    int degree_max = 1;
    std::string primes_csv;
    std::int64_t budget_entries = kDefaultEntryBudget;
    bool no_epsilon_chains = false;
    bool allow_long = false;
    std::string format = "text";
    std::string out_path;
};

void add_spec_flags(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--family", args.family, "algebra family: A, B, C or D")->required();
    cmd->add_option("--rank", args.rank, "algebra rank")->required();
}

void add_output_flags(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--format", args.format, "output format: json, csv or text");
    cmd->add_option("--out", args.out_path, "write the report to this file instead of stdout");
}

void add_run_flags(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--degree-min", args.degree_min, "first tensor degree");
    cmd->add_option("--degree-max", args.degree_max, "last tensor degree");
    cmd->add_option("--primes", args.primes_csv, "comma-separated primes for modular ranks (also via INVTENSOR_PRIMES)");
    cmd->add_option("--budget-entries", args.budget_entries, "dense tensor entry budget");
    cmd->add_flag("--no-epsilon-chains", args.no_epsilon_chains, "restrict family D generators to trace products");
    cmd->add_flag("--allow-long", args.allow_long, "raise internal budgets for long runs");
}

RunConfig make_config(const CommonArgs& args)
{
    RunConfig cfg;
    AlgebraSpec spec;
    if (args.family.size() != 1)
        throw InvalidRank("family must be one of A, B, C, D");
    spec.family = family_from_letter(args.family[0]);
    spec.rank = args.rank;
    validate_spec(spec);
    cfg.specs = { spec };
    cfg.degree_min = args.degree_min;
    cfg.degree_max = args.degree_max;
    if (cfg.degree_min > cfg.degree_max || cfg.degree_min < 1)
        throw Error("empty or invalid degree range");
    cfg.primes = primes_from_env_or(args.primes_csv.empty() ? default_primes() : parse_primes(args.primes_csv));
    if (!args.primes_csv.empty())
        cfg.primes = parse_primes(args.primes_csv);
    cfg.entry_budget = args.budget_entries;
    if (args.allow_long) {
        cfg.modular_budget = kDefaultModularBudget * 16;
        cfg.exact_budget = kDefaultExactBudget * 16;
    }
    cfg.epsilon_chains = !args.no_epsilon_chains;
    cfg.format = args.format;
    cfg.out_path = args.out_path;
    return cfg;
}

std::vector<VerificationReport> run_verifications(const RunConfig& cfg)
{
    std::vector<VerificationReport> reports;
    for (auto& spec : cfg.specs) {
        ClassicalAlgebra alg = build_algebra(spec);
        std::int64_t realize_budget = std::min(cfg.exact_budget, cfg.entry_budget);
        for (int k = cfg.degree_min; k <= cfg.degree_max; ++k)
            reports.push_back(verify_theorem(alg, k, cfg.epsilon_chains, cfg.primes, cfg.modular_budget, realize_budget));
    }
    return reports;
}

int cmd_algebra_info(const CommonArgs& args)
{
    RunConfig cfg = make_config(args);
    ClassicalAlgebra alg = with_exponents(build_algebra(cfg.specs[0]), cfg.primes, cfg.modular_budget);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["tool_version"] = kToolVersion;
        j["family"] = std::string(1, family_letter(alg.spec.family));
        j["rank"] = alg.spec.rank;
        j["dim_v"] = alg.dimV;
        j["dim_g"] = alg.dimG;
        j["exponents"] = alg.exponents;
        j["killing_ratio"] = rat_to_string(killing_ratio(alg));
        j["basis_convention"] = kBasisConvention;
        emit(cfg.out_path, j.dump(2) + "\n");
    } else {
        std::string s = alg.spec.name() + ": dimV=" + std::to_string(alg.dimV) + " dimG=" + std::to_string(alg.dimG);
        s += " exponents=[";
        for (std::size_t i = 0; i < alg.exponents.size(); ++i)
            s += (i ? "," : "") + std::to_string(alg.exponents[i]);
        s += "] killing_ratio=" + rat_to_string(killing_ratio(alg)) + "\n";
        emit(cfg.out_path, s);
    }
    return kExitOk;
}

int cmd_verify_theorem(const CommonArgs& args)
{
    RunConfig cfg = make_config(args);
    std::vector<VerificationReport> reports = run_verifications(cfg);
    std::string content;
    if (cfg.format == "json")
        content = render_json(cfg, reports, report_to_json);
    else if (cfg.format == "csv")
        content = dims_csv(reports);
    else
        for (auto& r : reports)
            content += report_text(r);
    emit(cfg.out_path, content);
    for (auto& r : reports)
        if (!r.certified)
            return kExitDisagreement;
    return kExitOk;
}

int cmd_verify_identities(const CommonArgs& args)
{
    RunConfig cfg = make_config(args);
    ClassicalAlgebra alg = build_algebra(cfg.specs[0]);
    std::vector<IdentityResult> results;
    for (int n = 2; n <= 4; ++n)
        results.push_back(check_epsilon_delta(n));
    for (auto& r : run_identities(alg, cfg.primes, cfg.modular_budget))
        results.push_back(r);
    std::string content;
    if (cfg.format == "json")
        content = render_json(cfg, results, identity_to_json);
    else
        for (auto& r : results)
            content += identity_text(r);
    emit(cfg.out_path, content);
    for (auto& r : results)
        if (!r.passed)
            return kExitDisagreement;
    return kExitOk;
}

int cmd_table_dims(const CommonArgs& args)
{
    RunConfig cfg = make_config(args);
    std::vector<VerificationReport> reports = run_verifications(cfg);
    emit(cfg.out_path, dims_csv(reports));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{ "exact verification of invariant-tensor generation for the classical Lie algebras" };
    app.require_subcommand(1);
    CommonArgs args;

    CLI::App* algebra = app.add_subcommand("algebra", "algebra-level queries");
    CLI::App* info = algebra->add_subcommand("info", "print dimensions, exponents and the Killing ratio");
    add_spec_flags(info, args);
    add_output_flags(info, args);

    CLI::App* verify = app.add_subcommand("verify", "verification runs");
    CLI::App* theorem = verify->add_subcommand("theorem", "compare the generator span with the invariant kernel");
    add_spec_flags(theorem, args);
    add_run_flags(theorem, args);
    add_output_flags(theorem, args);
    CLI::App* identities = verify->add_subcommand("identities", "run the exact identity suite");
    add_spec_flags(identities, args);
    add_output_flags(identities, args);
    identities->add_option("--primes", args.primes_csv, "comma-separated primes (also via INVTENSOR_PRIMES)");

    CLI::App* table = app.add_subcommand("table", "tabulations");
    CLI::App* dims = table->add_subcommand("dims", "dimension table as CSV");
    add_spec_flags(dims, args);
    add_run_flags(dims, args);
    add_output_flags(dims, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (info->parsed())
            return cmd_algebra_info(args);
        if (theorem->parsed())
            return cmd_verify_theorem(args);
        if (identities->parsed())
            return cmd_verify_identities(args);
        if (dims->parsed()) {
            args.format = "csv";
            return cmd_table_dims(args);
        }
    } catch (const PrimeDisagreement& e) {
        std::cerr << "disagreement: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        if (!args.allow_long)
            std::cerr << "rerun with --allow-long to raise internal budgets\n";
        return kExitConfigError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
