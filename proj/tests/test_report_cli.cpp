#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "invtensor/report.hpp"

using namespace invtensor;

namespace {

std::string cli() { return INVT_CLI_PATH; }

int run(const std::string& args)
{
    int rc = std::system((cli() + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("report serialization round trip")
{
    VerificationReport r;
    r.spec = { Family::B, 2 };
    r.degree = 3;
    r.kernel_dim = 1;
    r.generator_count = 6;
    r.span_rank = 1;
    r.primes = default_primes();
    r.prime_agreement = true;
    r.certified = true;
    RunConfig cfg;
    cfg.specs = { r.spec };
    cfg.degree_min = 3;
    cfg.degree_max = 3;
    std::string json = render_json(cfg, std::vector<VerificationReport>{ r }, report_to_json);
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["tool_version"] == kToolVersion);
    CHECK(parsed["config"]["basis_convention"] == kBasisConvention);
    CHECK(parsed["config"]["primes"].size() == 2);
    CHECK(parsed["results"][0]["family"] == "B");
    CHECK(parsed["results"][0]["kernel_dim"] == 1);
    CHECK(parsed["results"][0]["agreement"] == true);
}

TEST_CASE("csv header and rows")
{
    VerificationReport r;
    r.spec = { Family::A, 1 };
    r.degree = 4;
    r.kernel_dim = 3;
    r.span_rank = 3;
    r.generator_count = 24;
    std::string csv = dims_csv({ r });
    CHECK(csv == "family,rank,degree,kernel_dim,span_rank,generator_count\nA,1,4,3,3,24\n");
}

TEST_CASE("rationals serialize exactly")
{
    IdentityResult res;
    res.name = "x";
    res.subject = "y";
    res.passed = false;
    res.max_abs_defect = Rat(3, 7);
    res.normalization = Rat(48);
    auto j = identity_to_json(res);
    CHECK(j["max_abs_defect"] == "3/7");
    CHECK(j["normalization"] == "48");
}

TEST_CASE("cli exit codes")
{
    CHECK(run("algebra info --family A --rank 2") == 0);
    CHECK(run("algebra info --family D --rank 2") == 2);
    CHECK(run("algebra info --family Z --rank 2") == 2);
    CHECK(run("verify theorem --family A --rank 1 --degree-min 3 --degree-max 2") == 2);
    CHECK(run("verify theorem --family A --rank 1 --degree-min 1 --degree-max 3") == 0);
    CHECK(run("verify theorem --family D --rank 3 --degree-min 3 --degree-max 3 --no-epsilon-chains") == 1);
    CHECK(run("verify identities --family A --rank 1") == 0);
    CHECK(run("nonsense") == 2);
}

TEST_CASE("cli csv table")
{
    std::string out = "/tmp/invt_cli_dims.csv";
    CHECK(run("table dims --family A --rank 1 --degree-min 1 --degree-max 4 --out " + out) == 0);
    std::string csv = slurp(out);
    CHECK(csv.rfind("family,rank,degree,kernel_dim,span_rank,generator_count\n", 0) == 0);
    CHECK(csv.find("A,1,4,3,3,24\n") != std::string::npos);
    int rows = 0;
    for (char c : csv)
        if (c == '\n')
            ++rows;
    CHECK(rows == 5); // header + 4 degrees
}

TEST_CASE("reports are byte-identical across runs")
{
    std::string a = "/tmp/invt_cli_run_a.json", b = "/tmp/invt_cli_run_b.json";
    std::string args = "verify theorem --family B --rank 2 --degree-min 1 --degree-max 3 --format json --out ";
    CHECK(run(args + a) == 0);
    CHECK(run(args + b) == 0);
    CHECK(slurp(a) == slurp(b));
    auto parsed = nlohmann::json::parse(slurp(a));
    CHECK(parsed["results"].size() == 3);
    for (auto& r : parsed["results"])
        CHECK(r["agreement"] == true);
}

TEST_CASE("primes can come from the environment")
{
    std::string out = "/tmp/invt_cli_env.json";
    int rc = std::system(("INVTENSOR_PRIMES=2147483647,2147483629,2147483587 " + cli()
                          + " verify theorem --family A --rank 1 --degree-min 2 --degree-max 2 --format json --out " + out + " > /dev/null 2>&1")
                             .c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    auto parsed = nlohmann::json::parse(slurp(out));
    CHECK(parsed["results"][0]["primes"].size() == 3);
    // a bad value is a configuration error
    int rc2 = std::system(("INVTENSOR_PRIMES=17 " + cli()
                           + " verify theorem --family A --rank 1 --degree-min 2 --degree-max 2 > /dev/null 2>&1")
                              .c_str());
    CHECK(WEXITSTATUS(rc2) == 2);
}
