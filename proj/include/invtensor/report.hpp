#pragma once

// Machine-readable reports: JSON for the verification and identity runs,
// CSV for the dimension table. Output is deterministic for fixed input.

#include <string>
#include <vector>

#include <json.hpp>

#include "invtensor/identities.hpp"
#include "invtensor/invariant_space.hpp"

namespace invtensor {

inline constexpr const char* kToolVersion = "invtensor 0.1.0";
// bump when the basis ordering or normalization changes; reports depend on it
inline constexpr const char* kBasisConvention = "split-form-v1";

struct RunConfig {
    std::vector<AlgebraSpec> specs;
    int degree_min = 1;
    int degree_max = 1;
    std::vector<u64> primes = default_primes();
    std::int64_t entry_budget = kDefaultEntryBudget;
    std::int64_t modular_budget = kDefaultModularBudget;
    std::int64_t exact_budget = kDefaultExactBudget;
    bool epsilon_chains = true;
    std::string format = "json"; // json | csv | text
    std::string out_path;        // empty = stdout
};

inline nlohmann::ordered_json config_to_json(const RunConfig& cfg)
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json specs = nlohmann::ordered_json::array();
    for (auto& s : cfg.specs)
        specs.push_back({ { "family", std::string(1, family_letter(s.family)) }, { "rank", s.rank } });
    j["specs"] = specs;
    j["degree_min"] = cfg.degree_min;
    j["degree_max"] = cfg.degree_max;
    j["primes"] = cfg.primes;
    j["entry_budget"] = cfg.entry_budget;
    j["modular_budget"] = cfg.modular_budget;
    j["exact_budget"] = cfg.exact_budget;
    j["epsilon_chains"] = cfg.epsilon_chains;
    j["basis_convention"] = kBasisConvention;
    return j;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_letter(r.spec.family));
    j["rank"] = r.spec.rank;
    j["degree"] = r.degree;
    j["kernel_dim"] = r.kernel_dim;
    j["generator_count"] = r.generator_count;
    j["span_rank"] = r.span_rank;
    j["membership_failures"] = r.membership_failures;
    j["primes"] = r.primes;
    j["prime_agreement"] = r.prime_agreement;
    j["agreement"] = r.certified;
    j["used_epsilon_chains"] = r.used_epsilon_chains;
    return j;
}

inline nlohmann::ordered_json identity_to_json(const IdentityResult& r)
{
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["subject"] = r.subject;
    j["passed"] = r.passed;
    j["max_abs_defect"] = rat_to_string(r.max_abs_defect);
    if (r.normalization)
        j["normalization"] = rat_to_string(*r.normalization);
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

template <typename ResultJsonizer, typename Results>
inline std::string render_json(const RunConfig& cfg, const Results& results, ResultJsonizer&& to_json_fn)
{
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["config"] = config_to_json(cfg);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& r : results)
        arr.push_back(to_json_fn(r));
    j["results"] = arr;
    return j.dump(2) + "\n";
}

inline std::string dims_csv(const std::vector<VerificationReport>& results)
{
    std::string out = "family,rank,degree,kernel_dim,span_rank,generator_count\n";
    for (auto& r : results) {
        out += std::string(1, family_letter(r.spec.family)) + "," + std::to_string(r.spec.rank) + ","
            + std::to_string(r.degree) + "," + std::to_string(r.kernel_dim) + ","
            + std::to_string(r.span_rank) + "," + std::to_string(r.generator_count) + "\n";
    }
    return out;
}

inline std::string report_text(const VerificationReport& r)
{
    std::string s = r.spec.name() + " degree " + std::to_string(r.degree) + ": kernel_dim=" + std::to_string(r.kernel_dim)
        + " span_rank=" + std::to_string(r.span_rank) + " generators=" + std::to_string(r.generator_count);
    s += r.certified ? " agreement=true" : " agreement=false";
    if (!r.membership_failures.empty()) {
        s += " membership_failures=[";
        for (std::size_t i = 0; i < r.membership_failures.size(); ++i)
            s += (i ? " " : "") + r.membership_failures[i];
        s += "]";
    }
    return s + "\n";
}

inline std::string identity_text(const IdentityResult& r)
{
    std::string s = r.subject + " " + r.name + ": " + (r.passed ? "pass" : "FAIL");
    if (!r.passed)
        s += " max_abs_defect=" + rat_to_string(r.max_abs_defect);
    if (r.normalization)
        s += " normalization=" + rat_to_string(*r.normalization);
    if (!r.detail.empty() && !r.passed)
        s += " (" + r.detail + ")";
    return s + "\n";
}

} // namespace invtensor
