#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "algent/cli.hpp"
#include "algent/roots.hpp"

namespace {

using nlohmann::ordered_json;

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = algent::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Writes content to a temp file, removes it on scope exit.
struct TempFile {
    std::filesystem::path path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream(path) << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    std::string str() const { return path.string(); }
};

const char* kLehmerLine = "1 1 0 -1 -1 -1 -1 -1 0 1 1\n";

std::vector<std::string> json_keys(const ordered_json& j) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    return keys;
}

}  // namespace

TEST_CASE("mahler emits the documented json contract") {
    TempFile f("algent_cli_mahler.txt", kLehmerLine);
    CliResult r = run_cli({"mahler", f.str(), "--json"});
    REQUIRE(r.code == 0);

    ordered_json j = ordered_json::parse(r.out);
    CHECK(json_keys(j) == std::vector<std::string>{"subcommand", "input_echo", "result",
                                                   "error_bound", "precision_bits", "log_base"});
    CHECK(j["subcommand"] == "mahler");
    CHECK(j["log_base"] == "e");
    CHECK(std::abs(j["result"]["value_nats"].get<double>() - 0.162357612008) < 2e-9);
    CHECK(j["error_bound"].get<double>() <= 1e-9);

    CliResult again = run_cli({"mahler", f.str(), "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("log base conversion adds a display value") {
    TempFile f("algent_cli_mahler2.txt", kLehmerLine);
    CliResult r = run_cli({"mahler", f.str(), "--json", "--log-base", "2"});
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["log_base"] == "2");
    double nats = j["result"]["value_nats"].get<double>();
    CHECK(j["display_value"].get<double>() == doctest::Approx(nats / std::log(2.0)).epsilon(1e-14));
    CHECK(json_keys(j).back() == "display_value");
}

TEST_CASE("human readable output") {
    TempFile f("algent_cli_mahler3.txt", kLehmerLine);
    CliResult r = run_cli({"mahler", f.str()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("value_nats: 0.162357612008") != std::string::npos);
    CHECK(r.out.find("precision_bits:") != std::string::npos);
    CHECK(r.out.find("{") == std::string::npos);

    CliResult base2 = run_cli({"mahler", f.str(), "--log-base", "2"});
    CHECK(base2.out.find("display_value (log base 2):") != std::string::npos);
}

TEST_CASE("mahler accepts non-monic integer polynomials") {
    TempFile f("algent_cli_nonmonic.txt", "2 3\n");
    CliResult r = run_cli({"mahler", f.str(), "--json"});
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(std::abs(j["result"]["value_nats"].get<double>() - std::log(3.0)) < 1e-10);
    CHECK(j["result"]["log_leading"].get<double>() == doctest::Approx(std::log(3.0)));

    // Non-monic truly-rational input stays rejected.
    TempFile g("algent_cli_nonmonic_rat.txt", "1/2 3/2 2\n");
    CHECK(run_cli({"mahler", g.str()}).code == 1);
}

TEST_CASE("entropy reports the quotient dimension") {
    TempFile fib("algent_cli_fib.txt", "0 1\n1 1\n");
    CliResult r = run_cli({"entropy", fib.str(), "--json"});
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(std::abs(j["result"]["value_nats"].get<double>() - 0.4812118250596035) < 1e-10);
    CHECK(j["result"]["reduced_dimension"] == 2);

    // Singular input drops to the quotient automatically.
    TempFile sing("algent_cli_sing.txt", "1 2\n2 4\n");
    CliResult s = run_cli({"entropy", sing.str(), "--json"});
    REQUIRE(s.code == 0);
    ordered_json js = ordered_json::parse(s.out);
    CHECK(std::abs(js["result"]["value_nats"].get<double>() - std::log(5.0)) < 1e-10);
    CHECK(js["result"]["reduced_dimension"] == 1);
}

TEST_CASE("usage errors exit with 2") {
    TempFile bad("algent_cli_bad.txt", "1 x 1\n");
    CliResult r = run_cli({"mahler", bad.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.err.find("column 3") != std::string::npos);
    CHECK(r.err.find("malformed coefficient 'x'") != std::string::npos);

    TempFile ragged("algent_cli_ragged.txt", "1 2\n3\n");
    CHECK(run_cli({"entropy", ragged.str()}).code == 2);

    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"mahler", "/nonexistent/algent.txt"}).code == 2);
    CHECK(run_cli({"mahler"}).code == 2);
    TempFile ok("algent_cli_ok.txt", "1 1\n");
    CHECK(run_cli({"mahler", ok.str(), "--log-base", "7"}).code == 2);
    CHECK(run_cli({"verify", "bogus"}).code == 2);
    CHECK(run_cli({"unknown-subcommand"}).code == 2);
}

TEST_CASE("computational failures exit with 1") {
    TempFile nonmonic("algent_cli_nm.txt", "2 2\n");
    CliResult r = run_cli({"lehmer-seq", nonmonic.str(), "-N", "3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("Delta_n defined for monic polynomials") != std::string::npos);

    CliResult capped = run_cli({"trajectory", "--action", "scalar(2, 1)", "--set", "0; 1",
                                "-N", "5", "--cap", "1"});
    CHECK(capped.code == 1);
    CHECK(capped.err.find("cap is smaller than the base set") != std::string::npos);
}

TEST_CASE("trajectory reports sizes and growth") {
    CliResult r = run_cli({"trajectory", "--action", "scalar(2, 1)", "--set", "0; 1",
                           "-N", "5", "--json"});
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["result"]["sizes"] == ordered_json::array({2, 4, 8, 16, 32}));
    CHECK(j["result"]["truncated"] == false);
    CHECK(j["result"]["recorded"] == 5);
    CHECK(j["result"]["fekete_upper"].get<double>() == doctest::Approx(std::log(2.0)));
    CHECK(j["result"]["tail_slope"].get<double>() == doctest::Approx(std::log(2.0)));

    CliResult m = run_cli({"trajectory", "--action", "matrix(1 1; 0 1)", "--set", "box:1",
                           "-N", "4", "--json"});
    REQUIRE(m.code == 0);
    ordered_json jm = ordered_json::parse(m.out);
    CHECK(jm["result"]["sizes"] == ordered_json::array({9, 29, 65, 121}));
}

TEST_CASE("lehmer-seq lists the profile") {
    TempFile f("algent_cli_two.txt", "-2 1\n");
    CliResult r = run_cli({"lehmer-seq", f.str(), "-N", "5", "--json"});
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    auto rows = j["result"];
    REQUIRE(rows.size() == 5);
    CHECK(rows[0][0] == 1);
    CHECK(rows[0][1].get<double>() == 0.0);  // Delta_1 = 1
    CHECK(rows[2][1].get<double>() == doctest::Approx(std::log(7.0) / 3.0));

    // Undefined entries are null.
    TempFile unit("algent_cli_unit.txt", "-1 1\n");
    CliResult u = run_cli({"lehmer-seq", unit.str(), "-N", "3", "--json"});
    REQUIRE(u.code == 0);
    ordered_json ju = ordered_json::parse(u.out);
    for (const auto& row : ju["result"]) CHECK(row[1].is_null());
}

TEST_CASE("kronecker answers the zero-measure question") {
    TempFile cyc("algent_cli_cyc.txt", "1 1 1\n");
    ordered_json j = ordered_json::parse(run_cli({"kronecker", cyc.str(), "--json"}).out);
    CHECK(j["result"] == true);

    TempFile fib("algent_cli_gold.txt", "-1 -1 1\n");
    ordered_json k = ordered_json::parse(run_cli({"kronecker", fib.str(), "--json"}).out);
    CHECK(k["result"] == false);
}

TEST_CASE("search output is stable across worker counts") {
    CliResult one = run_cli({"search", "-d", "3", "-H", "1", "-t", "0.3",
                             "--workers", "1", "--json"});
    CliResult four = run_cli({"search", "-d", "3", "-H", "1", "-t", "0.3",
                              "--workers", "4", "--json"});
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);

    ordered_json j = ordered_json::parse(one.out);
    REQUIRE(j["result"].size() == 4);
    for (const auto& f : j["result"])
        CHECK(std::abs(f["value_nats"].get<double>() - 0.2811995743) < 1e-6);
    CHECK(j["result"][0]["coefficients"].size() == 4);
}

TEST_CASE("verify suites pass at the default tolerance") {
    for (const char* mode : {"addition", "power", "product"}) {
        CliResult r = run_cli({"verify", mode, "--cases", "10", "--seed", "1", "--json"});
        REQUIRE(r.code == 0);
        ordered_json j = ordered_json::parse(r.out);
        CHECK(j["result"]["mode"] == mode);
        CHECK(j["result"]["cases"] == 10);
        CHECK(j["result"]["failures"] == 0);
        CHECK(j["result"]["max_defect"].get<double>() <=
              j["result"]["max_combined_error"].get<double>());

        CliResult again = run_cli({"verify", mode, "--cases", "10", "--seed", "1", "--json"});
        CHECK(again.out == r.out);
    }
}

TEST_CASE("precision flag raises the working precision") {
    TempFile f("algent_cli_prec.txt", kLehmerLine);
    CliResult base = run_cli({"mahler", f.str(), "--json"});
    CliResult deep = run_cli({"mahler", f.str(), "--json", "--precision", "256"});
    REQUIRE(deep.code == 0);
    CHECK(ordered_json::parse(base.out)["precision_bits"].get<int>() < 256);
    CHECK(ordered_json::parse(deep.out)["precision_bits"].get<int>() >= 256);
    CHECK(run_cli({"mahler", f.str(), "--precision", "32"}).code == 2);

    algent::set_ladder_start_bits(128);  // leave the process default in place
}

TEST_CASE("help is a success") {
    CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("algent") != std::string::npos);
}
