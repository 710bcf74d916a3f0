// rdr: inradius / diameter / circumradius toolkit for convex polytopes in
// 3-space. Subcommands: functionals, check, boundary, sample, isosceles,
// verify. Exit codes: 0 success or feasible, 1 semantic negative (infeasible
// triple, failed suite), 2 usage or parse error, 3 degenerate input.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rdr/body.hpp"
#include "rdr/diagram.hpp"
#include "rdr/errors.hpp"
#include "rdr/functionals.hpp"
#include "rdr/json_io.hpp"
#include "rdr/simplex_family.hpp"
#include "rdr/tolerances.hpp"
#include "rdr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rdr::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string d17(double v) { return rdr::format_double17(v); }

int cmd_functionals(const std::string& body_path, const std::string& gauge_path) {
    const rdr::VBody body = rdr::parse_body_json(read_file(body_path));
    const rdr::FunctionalTriple t = rdr::functional_triple(body);
    const bool planar = rdr::affine_dimension(body) < body.dim();

    std::string out = "{\"r\":" + d17(t.r) + ",\"D\":" + d17(t.D) + ",\"R\":" + d17(t.R);
    if (!gauge_path.empty()) {
        const rdr::Gauge gauge = rdr::parse_gauge_json(read_file(gauge_path), body.dim());
        const double rg = rdr::inradius_gauge(rdr::hull_facets(body), gauge).radius;
        out += ",\"r_gauge\":" + d17(rg);
    }
    if (planar) out += ",\"note\":\"planar\"";
    out += "}";
    std::cout << out << "\n";
    return kExitOk;
}

int cmd_check(double r, double D, double R) {
    // Negative values are legal inputs (the verdict reports them as
    // violations); only non-finite flags are usage errors.
    if (!std::isfinite(r) || !std::isfinite(D) || !std::isfinite(R)) {
        std::cerr << "check: flags must be finite\n";
        return kExitUsage;
    }
    const rdr::FeasibilityVerdict v = rdr::check_complete_system({r, D, R});
    std::string out = std::string("{\"feasible\":") + (v.feasible ? "true" : "false");
    out += ",\"slacks\":{";
    bool first = true;
    for (const auto& [id, slack] : v.evaluated) {
        if (!first) out += ",";
        first = false;
        out += std::string("\"") + rdr::inequality_name(id) + "\":" + d17(slack);
    }
    out += "},\"tight\":[";
    first = true;
    for (const rdr::Inequality id : v.equalities) {
        if (!first) out += ",";
        first = false;
        out += std::string("\"") + rdr::inequality_name(id) + "\"";
    }
    out += "]}";
    std::cout << out << "\n";
    return v.feasible ? kExitOk : kExitNegative;
}

int cmd_boundary(int samples, const std::string& out_path) {
    const auto boundary = rdr::boundary_polyline(samples);
    std::ofstream out(out_path);
    if (!out) throw rdr::ParseError("cannot write '" + out_path + "'");
    rdr::write_boundary_csv(boundary, out);
    return kExitOk;
}

int cmd_sample(const std::vector<std::string>& families, int n, std::uint64_t seed,
               const std::string& out_path, const std::string& svg_path, int boundary_samples) {
    const auto rows = rdr::sample_diagram(families, n, seed);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw rdr::ParseError("cannot write '" + out_path + "'");
        rdr::write_sample_csv(rows, out);
    } else {
        rdr::write_sample_csv(rows, std::cout);
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw rdr::ParseError("cannot write '" + svg_path + "'");
        rdr::render_svg(rows, rdr::boundary_polyline(boundary_samples), svg);
    }
    return kExitOk;
}

int cmd_isosceles(double D) {
    const rdr::VBody s = rdr::isosceles_simplex(D);
    const double a = rdr::short_edge_for_five_diametral(D, 1.0);
    const double r = rdr::isosceles_inradius(D, 1.0);
    std::string out = "{\"vertices\":[";
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        if (i) out += ",";
        const rdr::Vec& v = s.vertices()[i];
        out += "[" + d17(v[0]) + "," + d17(v[1]) + "," + d17(v[2]) + "]";
    }
    out += "],\"short_edge\":" + d17(a) + ",\"D\":" + d17(D) + ",\"r\":" + d17(r) + "}";
    std::cout << out << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
    const rdr::SuiteReport report = rdr::run_suite(suite, trials, seed);
    std::cout << rdr::report_to_json(report) << "\n";
    return report.passed() ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inradius/diameter/circumradius toolkit for convex bodies in 3-space"};
    app.require_subcommand(1);

    if (const char* tol = std::getenv("RDR_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(tol, &end);
        if (end == tol || !(v > 0.0)) {
            std::cerr << "RDR_TOL must be a positive number\n";
            return kExitUsage;
        }
        rdr::tolerances().geometric = v;
        rdr::tolerances().tight = v;
    }

    std::string body_path, gauge_path;
    auto* functionals = app.add_subcommand(
        "functionals", "r, D, R (and gauge inradius) of a body JSON file");
    functionals->add_option("body", body_path, "body JSON path")->required();
    functionals->add_option("--gauge", gauge_path, "gauge JSON path");

    double flag_r = 0.0, flag_d = 0.0, flag_big_r = 0.0;
    auto* check = app.add_subcommand("check", "test a (r, D, R) triple for realizability");
    check->add_option("--r", flag_r, "inradius")->required();
    check->add_option("--D", flag_d, "diameter")->required();
    check->add_option("--R", flag_big_r, "circumradius")->required();

    int boundary_samples = 100;
    std::string boundary_out;
    auto* boundary = app.add_subcommand("boundary", "emit the diagram boundary as CSV");
    boundary->add_option("--samples", boundary_samples, "samples per arc")
        ->check(CLI::Range(2, 1000000));
    boundary->add_option("--out", boundary_out, "output CSV path")->required();

    std::vector<std::string> families{"random-hull"};
    int sample_n = 100;
    std::uint64_t sample_seed = 1;
    std::string sample_out, sample_svg;
    auto* sample = app.add_subcommand("sample", "sample bodies and emit diagram points");
    sample->add_option("--families", families, "family names")->delimiter(',');
    sample->add_option("--n", sample_n, "points per family")->check(CLI::Range(0, 10000000));
    sample->add_option("--seed", sample_seed, "root seed");
    sample->add_option("--out", sample_out, "output CSV path (stdout when omitted)");
    sample->add_option("--svg", sample_svg, "also render an SVG to this path");

    double iso_d = 0.0;
    auto* isosceles = app.add_subcommand(
        "isosceles", "vertices and inradius of the five-diametral-edge simplex");
    isosceles->add_option("--diameter", iso_d, "diameter in [sqrt(8/3), sqrt(3))")->required();

    std::string suite;
    int verify_trials = 200;
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite, "suite id")->required();
    verify->add_option("--trials", verify_trials, "trial count / grid density")
        ->check(CLI::Range(1, 10000000));
    verify->add_option("--seed", verify_seed, "root seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (functionals->parsed()) return cmd_functionals(body_path, gauge_path);
        if (check->parsed()) return cmd_check(flag_r, flag_d, flag_big_r);
        if (boundary->parsed()) return cmd_boundary(boundary_samples, boundary_out);
        if (sample->parsed())
            return cmd_sample(families, sample_n, sample_seed, sample_out, sample_svg,
                              boundary_samples);
        if (isosceles->parsed()) return cmd_isosceles(iso_d);
        if (verify->parsed()) return cmd_verify(suite, verify_trials, verify_seed);
    } catch (const rdr::DegenerateBody& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const rdr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rdr::UnknownName& e) {
        std::cerr << "unknown name: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rdr::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rdr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
