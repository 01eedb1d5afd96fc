// End-to-end tests of the command line tool. CFT_BIN is injected by the
// build system and points at the freshly built executable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

using json = nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const char* tag) {
    static int counter = 0;
    return "/tmp/cft_cli_" + std::to_string(getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

// Runs the tool through /bin/sh. An empty CFT_CONFIG assignment keeps the
// environment hermetic unless a test sets its own.
RunResult run_cli(const std::string& args, const std::string& env = "CFT_CONFIG=") {
    const std::string out_path = temp_path("out");
    const std::string err_path = temp_path("err");
    const std::string cmd = env + " " + std::string(CFT_BIN) + " " + args + " >" + out_path +
                            " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        lines.push_back(line);
    return lines;
}

double field(const std::string& csv_line, int index) {
    std::istringstream ss(csv_line);
    std::string cell;
    for (int i = 0; i <= index; ++i)
        REQUIRE(std::getline(ss, cell, ','));
    return std::stod(cell);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("pure: csv payload and headline value") {
    const RunResult r = run_cli("pure");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "value,error");
    CHECK(field(lines[1], 0) == doctest::Approx(0.81517).epsilon(2e-4));
    CHECK(field(lines[1], 1) < 1e-4);
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("pure: json payload carries the configuration") {
    const RunResult r = run_cli("--format json --precision 9 pure");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(double(j["value"]) == doctest::Approx(0.815170407).epsilon(1e-6));
    CHECK(int(j["config"]["n_points"]) == 32001);
    CHECK(double(j["config"]["delta_max"]) == 160.0);
}

TEST_CASE("byte-identical reruns") {
    const RunResult a = run_cli("--format json pure");
    const RunResult b = run_cli("--format json pure");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    const RunResult c = run_cli("table --fits-only");
    const RunResult d = run_cli("table --fits-only");
    CHECK(c.out == d.out);
}

TEST_CASE("bounds: fractions parse exactly") {
    // 0.3333333333333333 rounds to the same double as 1/3
    const RunResult frac = run_cli("--precision 12 bounds --mu 1/3");
    const RunResult decl = run_cli("--precision 12 bounds --mu 0.3333333333333333");
    REQUIRE(frac.exit_code == 0);
    REQUIRE(decl.exit_code == 0);
    CHECK(frac.out == decl.out);
    const auto lines = lines_of(frac.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "mu,f_up,f_lo,n_cut,err");
    CHECK(field(lines[1], 1) == doctest::Approx(0.81322).epsilon(1e-3));
    CHECK(field(lines[1], 2) == doctest::Approx(0.76226).epsilon(1e-3));
}

TEST_CASE("bounds: comma lists and the pure limit") {
    const RunResult r = run_cli("bounds --mu 3/5,1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(field(lines[1], 1) == doctest::Approx(0.80291).epsilon(1e-3));
    CHECK(field(lines[1], 2) == doctest::Approx(0.79050).epsilon(1e-3));
    // upper and lower coincide digit for digit at mu = 1
    std::istringstream ss(lines[2]);
    std::string mu, up, lo;
    std::getline(ss, mu, ',');
    std::getline(ss, up, ',');
    std::getline(ss, lo, ',');
    CHECK(mu == "1");
    CHECK(up == lo);
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(run_cli("bounds --mu 1.5").exit_code == 2);
    CHECK(run_cli("bounds --mu 0").exit_code == 2);
    CHECK(run_cli("bounds --mu abc").exit_code == 2);
    CHECK(run_cli("bounds --mu 1/0").exit_code == 2);
    CHECK(run_cli("bounds").exit_code == 2);
    CHECK(run_cli("--precision 2 pure").exit_code == 2);
    CHECK(run_cli("--precision 13 pure").exit_code == 2);
    CHECK(run_cli("--format yaml pure").exit_code == 2);
    CHECK(run_cli("pure --no-such-flag").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("quantum").exit_code == 2);
    CHECK(run_cli("verdict --mu 0.5").exit_code == 2);
    CHECK(run_cli("verdict --experiment nope").exit_code == 2);
    CHECK(run_cli("dist --kind thermal-lower").exit_code == 2);
    CHECK(run_cli("average --side upper --eps 1").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("pure --help").exit_code == 0);
}

TEST_CASE("quantum eval") {
    const RunResult r = run_cli("quantum eval --r 0.5 --s 1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "r,s,f_q");
    CHECK(field(lines[1], 2) == doctest::Approx(0.8344983).epsilon(1e-6));
    const RunResult r2 = run_cli("--format json quantum eval --r 0 --s 1");
    const json j = json::parse(r2.out);
    CHECK(double(j["f_q"]) == doctest::Approx(0.8807971).epsilon(1e-6));
}

TEST_CASE("quantum critical") {
    const RunResult r = run_cli("quantum critical --s 1 --threshold 0.81517");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "s,threshold,r_c,r_c_db");
    CHECK(field(lines[1], 2) == doctest::Approx(0.5956689).epsilon(1e-6));

    // default threshold comes from the computed pure-state value
    const RunResult d = run_cli("quantum critical --s 1");
    CHECK(field(lines_of(d.out)[1], 2) == doctest::Approx(0.595667).epsilon(1e-4));

    // no crossing: the resource is too weak
    const RunResult none = run_cli("quantum critical --s 0.1 --threshold 0.9");
    REQUIRE(none.exit_code == 0);
    CHECK(lines_of(none.out)[1].find("None,None") != std::string::npos);
    const RunResult jn = run_cli("--format json quantum critical --s 0.1 --threshold 0.9");
    const json j = json::parse(jn.out);
    CHECK(j["r_c"].is_null());
}

TEST_CASE("quantum min-resource") {
    const RunResult r = run_cli("--format json quantum min-resource");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(double(j["s_star"]) == doctest::Approx(0.741981).epsilon(1e-4));
    CHECK(double(j["s_star_db"]) == doctest::Approx(6.44477).epsilon(1e-4));
}

TEST_CASE("verdicts for the built-in experiments") {
    const RunResult eit = run_cli("verdict --experiment eit-storage");
    REQUIRE(eit.exit_code == 0);
    const json je = json::parse(eit.out);
    CHECK(je["verdict"]["classification"] == "BeatsUpperBound");
    CHECK(double(je["verdict"]["margin_up_sigma"]) == doctest::Approx(8.65).epsilon(0.02));
    CHECK(je["experiment"]["key"] == "eit-storage");

    const RunResult furu = run_cli("verdict --experiment furusawa-tele");
    const json jf = json::parse(furu.out);
    CHECK(jf["verdict"]["classification"] == "BeatsUpperBound");
    CHECK(double(jf["verdict"]["margin_up_sigma"]) == doctest::Approx(0.94).epsilon(0.05));

    const RunResult band = run_cli("verdict --experiment broadband-tele");
    const json jb = json::parse(band.out);
    CHECK(jb["verdict"]["classification"] == "BeatsUpperBound");

    // manual coordinates, including a sub-threshold case
    const RunResult low = run_cli("verdict --mu 1 --fidelity 0.5 --sigma 0.01");
    const json jl = json::parse(low.out);
    CHECK(jl["verdict"]["classification"] == "BelowLowerBound");
}

TEST_CASE("dist: parity mismatch warns but succeeds") {
    const RunResult r = run_cli("--points 101 --delta-max 5 dist --kind cross --n 2 --seed 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.find("parity") != std::string::npos);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 102);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(field(lines[i], 1) == 0.0);
}

TEST_CASE("dist: vacuum density at reduced resolution") {
    // a grid too coarse to hold the normalization is refused outright
    CHECK(run_cli("--points 201 dist --kind opt-vacuum").exit_code == 1);

    const RunResult r = run_cli("--points 4001 dist --kind opt-vacuum");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4002);
    CHECK(lines[0] == "delta,density");
    // center bin carries the peak value
    CHECK(field(lines[2001], 0) == 0.0);
    CHECK(field(lines[2001], 1) == doctest::Approx(0.648188).epsilon(1e-3));
}

TEST_CASE("dist: thermal mixture json metadata") {
    const RunResult r =
        run_cli("--format json --points 101 --delta-max 6 dist --kind thermal-lower --mu 1/2");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["kind"] == "thermal-lower");
    CHECK(double(j["mu"]) == 0.5);
    CHECK(int(j["n_cut"]) == 13);
    CHECK(j["density"]["samples"].size() == 101);
}

TEST_CASE("config file supplies defaults, flags still win") {
    const std::string path = temp_path("config") + ".json";
    {
        std::ofstream cfg(path);
        cfg << "{\"format\": \"json\", \"precision\": 8}\n";
    }
    const std::string env = "CFT_CONFIG=" + path;
    const RunResult r = run_cli("pure", env);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"value\": 0.81517041") != std::string::npos);
    // an explicit flag overrides the file
    const RunResult csv = run_cli("--format csv pure", env);
    CHECK(lines_of(csv.out)[0] == "value,error");
    std::remove(path.c_str());

    CHECK(run_cli("pure", "CFT_CONFIG=/no/such/file.json").exit_code == 2);
    const std::string bad = temp_path("badconfig") + ".json";
    {
        std::ofstream cfg(bad);
        cfg << "{\"unknown_key\": 1}\n";
    }
    CHECK(run_cli("pure", "CFT_CONFIG=" + bad).exit_code == 2);
    {
        std::ofstream cfg(bad);
        cfg << "not json at all\n";
    }
    CHECK(run_cli("pure", "CFT_CONFIG=" + bad).exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("output flag writes the payload to a file") {
    const std::string path = temp_path("payload") + ".csv";
    const RunResult r = run_cli("-o " + path + " pure");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    const std::string body = slurp(path);
    CHECK(lines_of(body)[0] == "value,error");
    std::remove(path.c_str());
}

TEST_CASE("fit curves table") {
    const RunResult r = run_cli("table --fits-only");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 34);
    CHECK(lines[0] == "mu,fit_up,fit_lo");
    // both fits close at 0.815 for pure states
    CHECK(lines.back() == "1,0.815,0.815");
    // first sample sits at mu = 1/9
    CHECK(field(lines[1], 0) == doctest::Approx(1.0 / 9.0).epsilon(1e-6));
    const RunResult j = run_cli("--format json table --fits-only");
    const json parsed = json::parse(j.out);
    CHECK(parsed["fits"].size() == 33);
}

TEST_CASE("average over a narrow purity window") {
    const RunResult r = run_cli("average --side upper --eps 0.999");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "side,eps,value,error");
    CHECK(field(lines[1], 2) == doctest::Approx(0.81517).epsilon(1e-3));
}

} // TEST_SUITE
