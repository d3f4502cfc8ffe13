#include <doctest.h>

#include "cli.hpp"
#include "generators.hpp"
#include "svt/io/json.hpp"
#include "svt/verify/suites.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace svt;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "svt_cli_tests";
    fs::create_directories(d);
    return d;
}

std::string write(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("verify exit codes and determinism") {
    Result a = run({"verify", "lemma3.1", "--trials", "20", "--seed", "7"});
    CHECK(a.code == 0);
    json j = json::parse(a.out);
    CHECK(j["suite"] == "lemma3.1");
    CHECK(j["trials"] == 20);
    CHECK(j["failures"].empty());
    CHECK(run({"--seed", "7", "verify", "lemma3.1", "--trials", "20"}).out == a.out);
    CHECK(run({"verify", "lemma3.1", "--trials", "20", "--seed", "8"}).out != a.out);

    CHECK(run({"verify", "prop4.3", "--trials", "5", "--seed", "1"}).code == 0);
    Result bad = run({"verify", "nosuch"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown suite") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "lemma3.1", "--prec", "32"}).code == 2);
}

TEST_CASE("every suite passes a short run") {
    for (const auto& name : verify::suite_names()) {
        if (name == "dirichlet") continue;  // minutes of lattice reduction; covered by the acceptance run
        CAPTURE(name);
        verify::SuiteReport r = verify::run_suite(name, {3, 11, 128});
        CHECK(r.ok());
        CHECK(r.to_json()["suite"] == name);
    }
    CHECK_THROWS_AS(verify::run_suite("nosuch", {}), PreconditionFailed);
}

TEST_CASE("report file is written whole") {
    fs::path out = scratch_dir() / "report.json";
    fs::remove(out);
    CHECK(run({"verify", "prop5.4", "--trials", "10", "--out", out.string()}).code == 0);
    CHECK(json::parse(slurp(out))["suite"] == "prop5.4");
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("experiment config errors") {
    CHECK(run({"experiment", write("empty.json", "")}).code == 2);
    Result broken = run({"experiment", write("broken.json", "{\n  \"command\": \"aux-search\",\n  \"D\": [5,\n}")});
    CHECK(broken.code == 2);
    CHECK(broken.err.find(":4:") != std::string::npos);
    Result missing = run({"experiment", write("missing.json",
                                               R"({"command": "aux-search", "params": {"xi": "0", "eta": "1", "r": "1", "s": "2"},
                                                   "D": [2], "beta": "2", "nu": "2"})")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("config.sigma") != std::string::npos);
    Result floaty = run({"experiment", write("floaty.json",
                                             R"({"command": "aux-search", "params": {"xi": "0", "eta": "1", "r": "1", "s": "2"},
                                                 "D": [2], "sigma": 1.5, "beta": "2", "nu": "2"})")});
    CHECK(floaty.code == 2);
    CHECK(run({"experiment", write("cmd.json", R"({"command": "dance"})")}).code == 2);
    CHECK(run({"experiment", (scratch_dir() / "absent.json").string()}).code == 2);
}

TEST_CASE("aux-search experiment writes one row per degree") {
    std::string base = (scratch_dir() / "aux_out").string();
    std::string cfg = write("aux.json", R"({"command": "aux-search",
        "params": {"xi": "0", "eta": "1", "r": "1", "s": "2"},
        "D": {"from": 2, "to": 5}, "sigma": "1", "beta": "3", "nu": "5/2", "output": ")" + base + R"("})");
    Result r = run({"experiment", cfg});
    REQUIRE(r.code == 0);
    std::string csv = slurp(base + ".csv");
    CHECK(csv.rfind("D,status,norm_margin,value_margin,note\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(csv.find("\n5,found,") != std::string::npos);
    json rep = json::parse(slurp(base + ".json"));
    CHECK(rep["results"].size() == 4);
    CHECK(rep["results"][3]["status"] == "found");
    // same config, same bytes
    std::string first = slurp(base + ".json");
    REQUIRE(run({"experiment", cfg}).code == 0);
    CHECK(slurp(base + ".json") == first);
}

TEST_CASE("heights and interpolation experiments") {
    std::string hb = (scratch_dir() / "heights_out").string();
    Result h = run({"experiment", write("heights.json", R"({"command": "heights", "random": {"count": "10", "max_degree": 3},
                                                           "seed": 5, "output": ")" + hb + R"("})")});
    REQUIRE(h.code == 0);
    std::string csv = slurp(hb + ".csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
    CHECK(csv.rfind("index,n,h_inf,h_sup,h_abs_inf,h_abs_sup,gelfond_gap_sup\n", 0) == 0);

    std::string listed = write("sqrt2.json", R"({"command": "heights",
        "varieties": [{"minpoly": ["-2", "0", "1"], "coords": [["1"], ["0", "1"], ["1"]]}],
        "output": ")" + (scratch_dir() / "sqrt2_out").string() + R"("})");
    REQUIRE(run({"experiment", listed}).code == 0);
    json rep = json::parse(slurp(scratch_dir() / "sqrt2_out.json"));
    CHECK(rep["varieties"][0]["degree"] == 2);

    std::string ib = (scratch_dir() / "interp_out").string();
    Result i = run({"experiment", write("interp.json", R"({"command": "interpolation",
        "params": {"xi": "0", "eta": "1", "r": "1", "s": "2"}, "L": [1, 2, 3], "output": ")" + ib + R"("})")});
    REQUIRE(i.code == 0);
    CHECK(slurp(ib + ".csv").find("\n1,3,") != std::string::npos);
    CHECK(json::parse(slurp(ib + ".json"))["c2"] == 8);
}

TEST_CASE("single-shot verbs") {
    Result g = run({"gamma", "-i", "2"});
    REQUIRE(g.code == 0);
    CHECK(json::parse(g.out)["points"][0]["coords"] == json::array({"1", "2", "4"}));

    Result d = run({"dual-basis", "-L", "1"});
    REQUIRE(d.code == 0);
    json dj = json::parse(d.out);
    CHECK(dj["M"] == 3);
    CHECK(dj["kronecker"] == true);
    CHECK(io::form_from_json(dj["basis"][0]["poly"], "basis") == poly::QForm::variable(2) - mpq_class(2) * poly::QForm::variable(1));

    Result c = run({"chow", "--minpoly", "-2,0,1", "--x0", "1", "--x1", "0,1", "--x2", "1"});
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["degree"] == 2);
    CHECK(run({"chow", "--minpoly", "-1,0,1", "--x0", "1", "--x1", "0,1", "--x2", "1"}).code == 2);
    CHECK(run({"chow", "--minpoly", "x"}).code == 2);

    Result a = run({"aux-search", "-D", "5", "--beta", "3", "--nu", "5/2"});
    CHECK(a.code == 0);
    CHECK(json::parse(a.out)["status"] == "found");
    CHECK(run({"aux-search", "--xi", "abc"}).code == 2);
}

TEST_CASE("json readers") {
    auto p = io::params_from_json(json{{"xi", {{"minpoly", {"-2", "0", "1"}}, {"approx", "1.4"}}}, {"eta", "1"}, {"r", "1"}, {"s", "2"}});
    CHECK_FALSE(p.rational());
    json back = io::params_json(p);
    CHECK(back["xi"]["degree"] == 2);
    CHECK(io::params_from_json(json{{"xi", {{"minpoly", {"2", "-4"}}, {"approx", "0"}}}, {"eta", "1"}, {"r", "1"}, {"s", "2"}})
              .xi_q() == mpq_class(1, 2));
    CHECK_THROWS_AS(io::params_from_json(json{{"xi", "0"}, {"eta", "1"}, {"r", "1"}}), MalformedInput);
    CHECK_THROWS_AS(io::params_from_json(json{{"xi", "0"}, {"eta", "1"}, {"r", "1"}, {"s", "1"}}), MalformedInput);
    CHECK_THROWS_AS(io::read_rational(json(0.5), "x"), MalformedInput);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        poly::QForm f = gen::form(rng, (int)gen::integer(rng, 0, 5), 9);
        if (f.is_zero()) continue;
        CHECK(io::form_from_json(io::form_json(f), "f") == f);
    }
    CHECK_THROWS_AS(io::form_from_json(json::parse(R"([{"e0": 1, "e1": 0, "e2": 0, "coeff": "1"},
                                                       {"e0": 0, "e1": 2, "e2": 0, "coeff": "1"}])"), "f"),
                    MalformedInput);
    json b = io::ball_json(num::RealBall::from_mpq(mpq_class(1, 3), 64));
    CHECK(b["inf"].get<std::string>() < b["sup"].get<std::string>());
}

TEST_CASE("experiment refuses to overwrite its config") {
    fs::path cfg = scratch_dir() / "self.json";
    std::string base = (scratch_dir() / "self").string();
    std::ofstream(cfg) << R"({"command": "heights", "random": {"count": 1}, "output": ")" + base + R"("})";
    CHECK(run({"experiment", cfg.string()}).code == 2);
    CHECK(json::parse(slurp(cfg))["command"] == "heights");
}
