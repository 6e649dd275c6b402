#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "gprimes/cli.hpp"
#include "oracles.hpp"

using gprimes::cmd_exponents;
using gprimes::cmd_tabulate;
using gprimes::cmd_zeta;
using gprimes::GridKind;
using gprimes::OutputFormat;
using gprimes::parse_grid;
using gprimes::RunConfig;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("./" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("grid parsing") {
    uint64_t n = 0;
    CHECK(parse_grid("jumps", &n) == GridKind::Jumps);
    CHECK(parse_grid("dyadic", &n) == GridKind::Dyadic);
    CHECK(parse_grid("uniform:17", &n) == GridKind::Uniform);
    CHECK(n == 17);
    CHECK_THROWS_AS(parse_grid("uniform:0", &n), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("uniform:x", &n), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("grid", &n), std::invalid_argument);
}

TEST_CASE("tabulate jumps grid") {
    TempPath out("cli_tab_jumps.csv");
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 100.0;
    cfg.out_path = out.path;
    CHECK(cmd_tabulate(cfg) == gprimes::kExitOk);
    auto ls = lines_of(slurp(out.path));
    REQUIRE(ls.size() == 101);
    CHECK(ls[0] == "x,N,psi,M,pi");
    CHECK(ls[1] == "1,1,0,1,0");
    auto last = split_csv(ls.back());
    REQUIRE(last.size() == 5);
    CHECK(last[0] == "100");
    CHECK(last[1] == "100");
    CHECK(last[3] == "1");    // Mertens at 100
    CHECK(last[4] == "25");   // primes below 100
}

TEST_CASE("tabulate dyadic grid") {
    TempPath out("cli_tab_dyadic.csv");
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 1000.0;
    cfg.grid = GridKind::Dyadic;
    cfg.out_path = out.path;
    CHECK(cmd_tabulate(cfg) == gprimes::kExitOk);
    auto ls = lines_of(slurp(out.path));
    REQUIRE(ls.size() == 11);  // header plus 1,2,...,512
    CHECK(split_csv(ls[1])[0] == "1");
    CHECK(split_csv(ls[10])[0] == "512");
}

TEST_CASE("tabulate uniform grid") {
    TempPath out("cli_tab_uniform.csv");
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 100.0;
    cfg.grid = GridKind::Uniform;
    cfg.uniform_points = 5;
    cfg.out_path = out.path;
    CHECK(cmd_tabulate(cfg) == gprimes::kExitOk);
    auto ls = lines_of(slurp(out.path));
    REQUIRE(ls.size() == 6);
    CHECK(split_csv(ls[1])[0] == "1");
    CHECK(split_csv(ls[2])[0] == "25.75");
    CHECK(split_csv(ls[5])[0] == "100");

    cfg.uniform_points = 1;
    CHECK(cmd_tabulate(cfg) == gprimes::kExitOk);
    ls = lines_of(slurp(out.path));
    REQUIRE(ls.size() == 2);
    CHECK(split_csv(ls[1])[0] == "100");
}

TEST_CASE("tabulate rejects wrong format") {
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 10.0;
    cfg.format = OutputFormat::Json;
    cfg.format_given = true;
    CHECK(cmd_tabulate(cfg) == gprimes::kExitSpecError);
}

TEST_CASE("tabulate exit codes") {
    RunConfig cfg;
    cfg.system_spec = "not-a-system";
    CHECK(cmd_tabulate(cfg) == gprimes::kExitSpecError);

    cfg.system_spec = "classical";
    cfg.x_max = 1e6;
    cfg.budget = 1000;
    TempPath out("cli_tab_budget.csv");
    cfg.out_path = out.path;
    CHECK(cmd_tabulate(cfg) == gprimes::kExitBudget);
    CHECK(slurp(out.path).empty());  // no partial file on budget failure
}

TEST_CASE("exponents selftest") {
    TempPath out("cli_exp_selftest.json");
    RunConfig cfg;
    cfg.selftest = "power:0.5";
    cfg.x_max = 1e6;
    cfg.out_path = out.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitOk);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["schema"] == 1);
    CHECK(j["system"] == "selftest:power:0.5");
    CHECK(j["alpha"]["hat"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(j["gamma"]["hat"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(j["verdict"]["pass"].get<bool>());
    CHECK(j["verdict"]["reliable"].get<bool>());
    CHECK(!j["rho"]["estimated"].get<bool>());

    cfg.selftest = "power:oops";
    CHECK(cmd_exponents(cfg) == gprimes::kExitSpecError);
}

TEST_CASE("exponents classical sieve path") {
    TempPath out("cli_exp_classical.json");
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 1e6;
    cfg.out_path = out.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitOk);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["beta"]["hat"].get<double>() == 0.0);
    CHECK(j["alpha"]["hat"].get<double>() > 0.3);
    CHECK(j["alpha"]["hat"].get<double>() < 0.6);
    CHECK(j["gamma"]["hat"].get<double>() ==
          doctest::Approx(oracles::kClassicalGamma1e6).epsilon(1e-9));
    CHECK(!j["rho"]["estimated"].get<bool>());
    CHECK(j["rho"]["value"].get<double>() == 1.0);
}

TEST_CASE("exponents jump table path estimates rho") {
    TempPath out("cli_exp_rinv.json");
    RunConfig cfg;
    cfg.system_spec = "r-inverse";
    cfg.x_max = 1e4;
    cfg.out_path = out.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitOk);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["rho"]["estimated"].get<bool>());
    // this system's integers are sparser than the classical ones: 4579 of
    // them up to 1e4, cross-checked by brute force
    CHECK(j["rho"]["value"].get<double>() == doctest::Approx(0.4579).epsilon(1e-9));
    CHECK(j["system"] == "r-inverse");
}

TEST_CASE("exponents on doubly exponential stays flat") {
    TempPath out("cli_exp_de.json");
    RunConfig cfg;
    cfg.system_spec = "doubly-exp";
    cfg.x_max = 1e9;
    cfg.out_path = out.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitOk);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(std::fabs(j["gamma"]["hat"].get<double>()) <= 0.05);
}

TEST_CASE("exponents unreliable exit code") {
    TempPath out("cli_exp_small.json");
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 50.0;  // only 5 windows, 3 fitted
    cfg.out_path = out.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitUnreliable);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(!j["verdict"]["reliable"].get<bool>());
}

TEST_CASE("exponents rejects wrong format") {
    RunConfig cfg;
    cfg.selftest = "power:0.5";
    cfg.format = OutputFormat::Csv;
    cfg.format_given = true;
    CHECK(cmd_exponents(cfg) == gprimes::kExitSpecError);
}

TEST_CASE("zeta csv and route agreement") {
    std::string primes_path = "./cli_p23.txt";
    {
        std::ofstream os(primes_path);
        os << "2\n3\n";
    }
    TempPath out("cli_zeta_p23.csv");
    RunConfig cfg;
    cfg.system_spec = "explicit:file=" + primes_path;
    cfg.x_max = 1000.0;
    cfg.sigma_grid = {2.0, 3.0};
    cfg.t_grid = {0.0};
    cfg.out_path = out.path;
    CHECK(cmd_zeta(cfg) == gprimes::kExitOk);
    auto ls = lines_of(slurp(out.path));
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "sigma,t,route,re,im,trunc_bound");
    auto euler_row = split_csv(ls[1]);
    CHECK(euler_row[2] == "euler-product");
    CHECK(std::stod(euler_row[3]) == doctest::Approx(1.5).epsilon(1e-12));
    auto recip_row = split_csv(ls[2]);
    CHECK(recip_row[2] == "dirichlet-series");
    CHECK(std::stod(recip_row[3]) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(split_csv(ls[3])[2] == "mellin-integral");
    std::remove(primes_path.c_str());
}

TEST_CASE("zeta domain problems exit 2") {
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 1000.0;
    cfg.sigma_grid = {1.0};  // pole of the classical zeta
    TempPath out("cli_zeta_pole.csv");
    cfg.out_path = out.path;
    CHECK(cmd_zeta(cfg) == gprimes::kExitSpecError);
}

TEST_CASE("zeta budget exit 3") {
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 1e6;
    cfg.budget = 100;
    TempPath out("cli_zeta_budget.csv");
    cfg.out_path = out.path;
    CHECK(cmd_zeta(cfg) == gprimes::kExitBudget);
}

TEST_CASE("deterministic outputs") {
    TempPath out1("cli_det_1.json");
    TempPath out2("cli_det_2.json");
    RunConfig cfg;
    cfg.system_spec = "classical";
    cfg.x_max = 1e5;
    cfg.out_path = out1.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitOk);
    cfg.out_path = out2.path;
    CHECK(cmd_exponents(cfg) == gprimes::kExitOk);
    std::string a = slurp(out1.path);
    CHECK(!a.empty());
    CHECK(a == slurp(out2.path));
}
