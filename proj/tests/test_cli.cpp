#include "capax_cli.hpp"

#include "capax/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace capax;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json out_json(const CliResult& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("cli capacity") {
    auto r = run_cli({"capacity", "--ellipsoid", "1,2", "--k", "3"});
    CHECK(r.exit_code == 0);
    CHECK(out_json(r) == Json{{"c_k", "2"}});
}

TEST_CASE("cli ratio variants") {
    auto poly = run_cli({"ratio", "--polydisk", "1,1", "--k", "2"});
    CHECK(poly.exit_code == 0);
    Json j = out_json(poly);
    CHECK(j.at("nth_power") == "2");
    CHECK(j.at("n") == 2);
    CHECK(j.at("approx").get<double>() == doctest::Approx(1.41421356).epsilon(1e-8));

    auto ell = run_cli({"ratio", "--ellipsoid", "1,2", "--k", "2"});
    CHECK(out_json(ell).at("nth_power") == "2");

    auto both = run_cli({"ratio", "--ellipsoid", "1,2", "--polydisk", "1,1", "--k", "2"});
    CHECK(both.exit_code == 1);
    CHECK(out_json(both).contains("error"));
}

TEST_CASE("cli spectrum round trips") {
    auto r = run_cli({"spectrum", "--ellipsoid", "2/3,1/2", "--count", "6"});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    Ellipsoid e = ellipsoid_from_json(j.at("ellipsoid"));
    auto entries = spectrum(e, 6);
    REQUIRE(j.at("entries").size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(parse_rational(j.at("entries")[i].at("value").get<std::string>()) == entries[i].value);
        CHECK(j.at("entries")[i].at("j").get<std::int64_t>() == entries[i].source_index);
        CHECK(j.at("entries")[i].at("m").get<std::int64_t>() == entries[i].multiplier);
    }
}

TEST_CASE("cli kset") {
    auto r = run_cli({"kset", "--ellipsoid", "1,2", "--max-m", "3"});
    CHECK(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(j.at("tau") == "2");
    CHECK(j.at("k_set") == Json::array({2, 5, 8}));
}

TEST_CASE("cli toric from a profile file") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "capax_test_profile.json";
    {
        std::ofstream out(path);
        out << to_json(polydisk_profile(1, 1)).dump();
    }
    auto r = run_cli({"toric", "--profile", path.string(), "--k", "3", "--support", "1,1"});
    CHECK(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(j.at("volume") == "2");
    CHECK(j.at("c_k") == "3");
    CHECK(j.at("support_max") == "2");
    CHECK(profile_from_json(j.at("profile")) == polydisk_profile(1, 1));
    fs::remove(path);
}

TEST_CASE("cli search") {
    auto r = run_cli({"search", "--n", "2", "--k", "3", "--denom-bound", "12"});
    CHECK(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(ellipsoid_from_json(j.at("ellipsoid")) == Ellipsoid::finite({2, 2}));
    CHECK(j.at("grid").at("matches_closed_form") == true);

    auto kap = run_cli({"search", "--kappa", "--n", "3"});
    CHECK(kap.exit_code == 0);
    CHECK(out_json(kap).at("kappa") == 3);
}

TEST_CASE("cli verify claims") {
    auto cross = run_cli({"verify", "crossover", "--k-max", "50"});
    CHECK(cross.exit_code == 0);
    CHECK(out_json(cross).at("verdict") == true);

    auto th = run_cli({"verify", "thresholds", "--k-max", "60", "--cover-k-max", "20"});
    CHECK(th.exit_code == 0);

    auto local = run_cli({"verify", "prop-ellipsoid-local", "--ellipsoid", "1,2", "--k-max", "6"});
    CHECK(local.exit_code == 0);
    CHECK(out_json(local).at("k_set_le_k_max") == Json::array({2, 5}));

    auto convex = run_cli({"verify", "prop-toric-convex", "--k", "2", "--grid", "default"});
    CHECK(convex.exit_code == 0);
    CHECK(out_json(convex).at("reports")[0].at("equality_loci").size() == 3);

    // a denominator bound that cannot reach the k = 4 maximizer E(2,3)
    auto fail = run_cli({"verify", "prop-ellipsoid-global", "--k", "4", "--denom-bound", "2"});
    CHECK(fail.exit_code == 1);
    CHECK(out_json(fail).at("verdict") == false);
}

TEST_CASE("cli output is deterministic, including across job counts") {
    auto a = run_cli({"verify", "prop-toric-convex", "--k", "3", "--jobs", "1"});
    auto b = run_cli({"verify", "prop-toric-convex", "--k", "3", "--jobs", "2"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto c = run_cli({"spectrum", "--ellipsoid", "1,3/2", "--count", "9"});
    auto d = run_cli({"spectrum", "--ellipsoid", "1,3/2", "--count", "9"});
    CHECK(c.out == d.out);
}

TEST_CASE("cli csv format") {
    auto r = run_cli({"capacity", "--ellipsoid", "1,2", "--k", "3", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "c_k,2\n");

    auto s = run_cli({"spectrum", "--ellipsoid", "1,2", "--count", "2", "--format", "csv"});
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("entries,value,j,m") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    auto usage = run_cli({"frobnicate"});
    CHECK(usage.exit_code == 2);
    CHECK_FALSE(usage.err.empty());

    auto missing = run_cli({"capacity", "--ellipsoid", "1,2"});
    CHECK(missing.exit_code == 2);

    auto domain = run_cli({"capacity", "--ellipsoid", "1,0", "--k", "1"});
    CHECK(domain.exit_code == 1);
    Json j = out_json(domain);
    CHECK(j.at("error").at("kind") == "domain");

    auto bad_rat = run_cli({"capacity", "--ellipsoid", "x/y", "--k", "1"});
    CHECK(bad_rat.exit_code == 1);

    auto help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("capacity") != std::string::npos);
}
