#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// Exercises the installed binary end to end; RDR_CLI_PATH is injected by the
// build so the test always runs the freshly built executable.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RDR_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/rdr_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kTetraJson =
    R"({"dim":3,"vertices":[[0.5773502691896258,0.5773502691896258,0.5773502691896258],
[0.5773502691896258,-0.5773502691896258,-0.5773502691896258],
[-0.5773502691896258,0.5773502691896258,-0.5773502691896258],
[-0.5773502691896258,-0.5773502691896258,0.5773502691896258]]})";

} // namespace

TEST_CASE("functionals on the regular tetrahedron") {
    const std::string path = write_temp("tetra.json", kTetraJson);
    const RunResult r = run("functionals " + path);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["r"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(j["D"].get<double>() == doctest::Approx(1.6329931618554521).epsilon(1e-12));
    CHECK(j["R"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(j.contains("note"));
}

TEST_CASE("functionals with a gauge file") {
    const std::string body = write_temp(
        "cube.json",
        R"({"dim":3,"vertices":[[1,1,1],[1,1,-1],[1,-1,1],[1,-1,-1],[-1,1,1],[-1,1,-1],[-1,-1,1],[-1,-1,-1]]})");
    const std::string gauge = write_temp(
        "oct.json",
        R"({"kind":"polytope","vertices":[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]})");
    const RunResult r = run("functionals " + body + " --gauge " + gauge);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["r_gauge"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const std::string ball = write_temp("ball.json", R"({"kind":"ball"})");
    const RunResult rb = run("functionals " + body + " --gauge " + ball);
    REQUIRE(rb.exit_code == 0);
    const auto jb = nlohmann::json::parse(rb.out);
    CHECK(jb["r_gauge"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("functionals on a planar body carries a note") {
    const std::string path = write_temp(
        "tri.json", R"({"dim":3,"vertices":[[0,1,0],[-0.9,-0.5,0],[0.9,-0.5,0]]})");
    const RunResult r = run("functionals " + path);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["r"].get<double>() == 0.0);
    CHECK(j["note"].get<std::string>() == "planar");
}

TEST_CASE("planar body with a gauge is degenerate: exit 3") {
    const std::string path = write_temp(
        "tri2.json", R"({"dim":3,"vertices":[[0,1,0],[-0.9,-0.5,0],[0.9,-0.5,0]]})");
    const std::string ball = write_temp("ball2.json", R"({"kind":"ball"})");
    CHECK(run("functionals " + path + " --gauge " + ball).exit_code == 3);
}

TEST_CASE("functionals parse failures exit 2") {
    const std::string bad = write_temp("bad.json", "{this is not json");
    CHECK(run("functionals " + bad).exit_code == 2);
    CHECK(run("functionals /tmp/definitely_missing_rdr.json").exit_code == 2);
    const std::string short_row =
        write_temp("short.json", R"({"dim":3,"vertices":[[1,2],[0,0,0]]})");
    CHECK(run("functionals " + short_row).exit_code == 2);
}

TEST_CASE("check verdicts and exit codes") {
    const RunResult feasible =
        run("check --r 0.3333333333 --D 1.6329931618554518 --R 1");
    CHECK(feasible.exit_code == 0);
    const auto j = nlohmann::json::parse(feasible.out);
    CHECK(j["feasible"].get<bool>());
    bool jung_tight = false, new_tight = false;
    for (const auto& t : j["tight"]) {
        if (t.get<std::string>() == "Jung") jung_tight = true;
        if (t.get<std::string>() == "new") new_tight = true;
    }
    CHECK(jung_tight);
    CHECK(new_tight);

    const RunResult infeasible = run("check --r 0.2 --D 1.643 --R 1");
    CHECK(infeasible.exit_code == 1);
    const auto ji = nlohmann::json::parse(infeasible.out);
    CHECK_FALSE(ji["feasible"].get<bool>());
    CHECK(ji["slacks"]["new"].get<double>() < 0.0);

    const RunResult negative = run("check --r -1 --D 1 --R 1");
    CHECK(negative.exit_code == 1);
    const auto jn = nlohmann::json::parse(negative.out);
    CHECK(jn["slacks"]["r>=0"].get<double>() == doctest::Approx(-1.0));

    CHECK(run("check --r abc --D 1 --R 1").exit_code == 2);
    CHECK(run("check --r 0.1 --D 1").exit_code == 2); // missing flag
}

TEST_CASE("boundary csv has five arcs of the requested size") {
    const std::string path = "/tmp/rdr_cli_test_boundary.csv";
    CHECK(run("boundary --samples 100 --out " + path).exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y,arc");
    std::map<std::string, int> counts;
    while (std::getline(in, line)) {
        const auto pos = line.rfind(',');
        counts[line.substr(pos + 1)]++;
    }
    CHECK(counts.size() == 5);
    for (const auto& [arc, n] : counts) CHECK(n == 100);
}

TEST_CASE("sample determinism and svg emission") {
    const std::string csv1 = "/tmp/rdr_cli_test_s1.csv";
    const std::string csv2 = "/tmp/rdr_cli_test_s2.csv";
    const std::string svg = "/tmp/rdr_cli_test_plot.svg";
    CHECK(run("sample --families isosceles,random-hull --n 12 --seed 9 --out " + csv1)
              .exit_code == 0);
    CHECK(run("sample --families isosceles,random-hull --n 12 --seed 9 --out " + csv2 +
              " --svg " + svg)
              .exit_code == 0);

    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(csv1);
    CHECK(a == slurp(csv2));
    CHECK(a.rfind("x,y,r,D,R,family,id\n", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 25);

    const std::string svg_text = slurp(svg);
    CHECK(svg_text.rfind("<?xml", 0) == 0);
    CHECK(svg_text.find("</svg>") != std::string::npos);

    CHECK(run("sample --families not-a-family --n 2 --seed 1 --out " + csv1).exit_code == 2);
}

TEST_CASE("isosceles subcommand") {
    const RunResult r = run("isosceles --diameter 1.6431676725154983");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["vertices"].size() == 4);
    CHECK(j["r"].get<double>() == doctest::Approx(0.33288287465667939).epsilon(1e-12));

    // five pairwise distances equal the diameter
    std::vector<std::array<double, 3>> v;
    for (const auto& row : j["vertices"])
        v.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    int diametral = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = i + 1; k < 4; ++k) {
            double d2 = 0.0;
            for (int c = 0; c < 3; ++c)
                d2 += (v[i][c] - v[k][c]) * (v[i][c] - v[k][c]);
            if (std::abs(std::sqrt(d2) - 1.6431676725154983) < 1e-9) ++diametral;
        }
    CHECK(diametral == 5);

    CHECK(run("isosceles --diameter 2.0").exit_code == 2);
}

TEST_CASE("verify subcommand") {
    const RunResult ok = run("verify --suite quasiconcavity --trials 20 --seed 1");
    CHECK(ok.exit_code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["suite"].get<std::string>() == "quasiconcavity");
    CHECK(j["trials"].get<int>() == 20);
    CHECK(j["failures"].empty());

    CHECK(run("verify --suite nonsense --trials 5 --seed 1").exit_code == 2);
}

TEST_CASE("no subcommand is a usage error") {
    CHECK(run("").exit_code == 2);
}

TEST_CASE("RDR_TOL loosens the verdict tolerance") {
    // slack of "new" here is about -3.3e-4: infeasible at the default
    // tolerance, feasible at 1e-3
    const std::string flags = "check --r 0.333 --D 1.6329931618554518 --R 1";
    CHECK(run(flags).exit_code == 1);
    const std::string cmd = "RDR_TOL=1e-3 " + std::string(RDR_CLI_PATH) + " " + flags +
                            " >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(WEXITSTATUS(std::system(
              ("RDR_TOL=bogus " + std::string(RDR_CLI_PATH) + " " + flags + " >/dev/null 2>&1")
                  .c_str())) == 2);
}
