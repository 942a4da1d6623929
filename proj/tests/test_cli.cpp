#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ccsync/cli.hpp"
#include "ccsync/io.hpp"

using namespace ccsync;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "ccsync-test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("stability defaults for the Lorenz system") {
    const auto c = parse_config({"stability", "--system", "lorenz", "--seed", "7"});
    CHECK(c.experiment == Experiment::Stability);
    CHECK(c.ccc.past_len == 150);
    CHECK(c.ccc.current_len == 15);
    CHECK(c.ccc.step == 80);
    CHECK(c.ccc.bins == 8);
    CHECK(c.master_ic == std::vector<double>{3, 4, 6});
    CHECK(c.slave_ic == std::vector<double>{7, 1, 6});
    CHECK(c.deltas == std::vector<double>{1, 10, 100});
    CHECK(c.k_max == 100);
    CHECK(c.method == IntegrationMethod::Euler);
    CHECK(c.dt == 0.001);
    CHECK(c.n_samples == 10000);
    CHECK(c.seed == 7);
}

TEST_CASE("ccc-matrix defaults for the Rossler system") {
    const auto c = parse_config({"ccc-matrix", "--system", "rossler"});
    CHECK(c.ccc.past_len == 300);
    CHECK(c.ccc.step == 200);
    CHECK(c.n_samples == 8000);
    CHECK(c.transients == 2000);
    CHECK(c.method == IntegrationMethod::Rk4);
    CHECK(c.dt == 0.01);
}

TEST_CASE("missing keys produce errors naming them") {
    CHECK_THROWS_WITH_AS(parse_config({}),
                         doctest::Contains("experiment"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config({"stability", "--system", "lorenz"}),
                         doctest::Contains("seed"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config({"simulate"}), doctest::Contains("system"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config({"simulate", "--system", "nosuch"}),
                         doctest::Contains("system"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config({"simulate", "--system", "lorenz", "--ccc-bins", "1"}),
                         doctest::Contains("bins"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config({"etc", "--column", "x"}),
                         doctest::Contains("input"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config({"stability", "--system", "lorenz", "--seed", "1", "--deltas", "5,2"}),
        doctest::Contains("deltas"), ConfigError);
}

TEST_CASE("emitted configuration round-trips") {
    auto base = parse_config({"stability", "--system", "lorenz", "--seed", "42", "--kmax", "7",
                              "--deltas", "0.5,2,8", "--transients", "12345", "--output",
                              "report.csv", "--format", "csv"});
    const std::string text = emit_config(base);
    const auto dir = temp_dir();
    const auto cfg_path = dir / "roundtrip.cfg";
    atomic_write(cfg_path.string(), text);
    const auto reparsed = parse_config({"--config", cfg_path.string()});
    CHECK(reparsed == base);
}

TEST_CASE("config file values are overridden by flags and unknown keys rejected") {
    const auto dir = temp_dir();
    const auto cfg_path = dir / "partial.cfg";
    atomic_write(cfg_path.string(),
                 "experiment=simulate\nsystem=henon\nsamples=120\ntransients=10\n");
    const auto c = parse_config({"--config", cfg_path.string(), "--samples", "60"});
    CHECK(c.experiment == Experiment::Simulate);
    CHECK(c.system == "henon");
    CHECK(c.n_samples == 60);    // flag wins
    CHECK(c.transients == 10);   // file value kept

    const auto bad_path = dir / "bad.cfg";
    atomic_write(bad_path.string(), "experiment=simulate\nsystem=henon\nfrobnicate=1\n");
    CHECK_THROWS_WITH_AS(parse_config({"--config", bad_path.string()}),
                         doctest::Contains("frobnicate"), ConfigError);
}

TEST_CASE("simulate writes the trajectory as CSV") {
    const auto dir = temp_dir();
    const auto out = dir / "henon.csv";
    auto c = parse_config({"simulate", "--system", "henon", "--samples", "50", "--transients",
                           "5", "--output", out.string()});
    CHECK(run(c) == 0);
    const auto data = read_csv(out.string());
    CHECK(data.header == std::vector<std::string>{"x", "y"});
    CHECK(data.values.rows() == 50);
}

TEST_CASE("etc subcommand reports the compression effort of a column") {
    const auto dir = temp_dir();
    const auto traj_path = dir / "traj.csv";
    auto sim = parse_config({"simulate", "--system", "henon", "--samples", "200", "--transients",
                             "5", "--output", traj_path.string()});
    REQUIRE(run(sim) == 0);
    const auto out = dir / "etc.json";
    auto c = parse_config({"etc", "--input", traj_path.string(), "--column", "x", "--ccc-bins",
                           "4", "--output", out.string()});
    CHECK(run(c) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["bins"] == 4);
    CHECK(j["length"] == 200);
    CHECK(j["iterations"].get<long>() > 0);
    CHECK(j["normalized"].get<double>() <= 1.0);
}

TEST_CASE("ccc-matrix emits a square JSON matrix with zero diagonal") {
    const auto dir = temp_dir();
    const auto out = dir / "henon-matrix.json";
    auto c = parse_config({"ccc-matrix", "--system", "henon", "--samples", "2000", "--transients",
                           "500", "--format", "json", "--output", out.string()});
    CHECK(run(c) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["variables"].size() == 2);
    CHECK(j["matrix"]["x"][0] == 0.0);
    CHECK(j["matrix"]["y"][1] == 0.0);
    CHECK(j["matrix"]["y"][0] != 0.0);
}

TEST_CASE("stability runs write delta,k,M rows and are seed-reproducible") {
    const auto dir = temp_dir();
    const auto out = dir / "stability.csv";
    const std::vector<std::string> args{
        "stability", "--system", "lorenz", "--seed",   "11",        "--kmax",
        "3",         "--deltas", "1,10",   "--samples", "2000",     "--transients",
        "500",       "--output", out.string()};
    auto c = parse_config(args);
    CHECK(run(c) == 0);
    const std::string first = slurp(out);
    const auto data = read_csv(out.string());
    CHECK(data.header == std::vector<std::string>{"delta", "k", "M"});
    CHECK(data.values.rows() == 6);  // 2 deltas x kmax 3

    CHECK(run(c) == 0);
    CHECK(slurp(out) == first);  // byte-identical rerun
}

TEST_CASE("divergent simulations exit with the divergence category") {
    auto c = parse_config({"simulate", "--system", "lorenz", "--master-ic", "1e8,1e8,1e8",
                           "--samples", "100", "--transients", "0"});
    CHECK(run(c) == 3);
}

TEST_CASE("classify emits predictions for every variable") {
    const auto dir = temp_dir();
    const auto out = dir / "classify.json";
    auto c = parse_config({"classify", "--system", "henon", "--samples", "3000", "--transients",
                           "500", "--output", out.string()});
    CHECK(run(c) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["predicted"].size() == 2);
    CHECK(j["ccc_net"].size() == 2);
}
