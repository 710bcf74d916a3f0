// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion pins its tolerance and a wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rdr/body.hpp"
#include "rdr/diagram.hpp"
#include "rdr/functionals.hpp"
#include "rdr/simplex_family.hpp"
#include "rdr/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int idx, const char* name, bool ok, double elapsed, double budget,
            const std::string& detail = "") {
    const bool in_budget = elapsed < budget;
    if (!(ok && in_budget)) ++failures;
    std::printf("[%2d] %-4s %-38s %6.2fs%s%s\n", idx, ok && in_budget ? "PASS" : "FAIL",
                name, elapsed, detail.empty() ? "" : "  ", detail.c_str());
    if (!in_budget) std::printf("     exceeded budget of %.0fs\n", budget);
}

template <typename F>
void criterion(int idx, const char* name, double budget, F&& body) {
    const auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    report(idx, name, ok, std::chrono::duration<double>(Clock::now() - t0).count(), budget,
           detail);
}

std::string suite_detail(const rdr::SuiteReport& r, bool& ok) {
    ok = r.passed() && r.skipped == 0;
    std::ostringstream ss;
    ss << r.trials << " trials, " << r.failures.size() << " failures, " << r.skipped
       << " skipped";
    if (!r.failures.empty()) ss << "; first: " << r.failures[0].description.substr(0, 80);
    return ss.str();
}

const double kSqrt83 = std::sqrt(8.0 / 3.0);
const double kSqrt3 = std::sqrt(3.0);

} // namespace

int main() {
    using rdr::Vec;

    criterion(1, "regular-tetrahedron corner", 1.0, [](bool& ok) {
        const double s = 1.0 / kSqrt3;
        const rdr::VBody tetra(
            3, {Vec{s, s, s}, Vec{s, -s, -s}, Vec{-s, s, -s}, Vec{-s, -s, s}});
        const auto t = rdr::functional_triple(tetra);
        const double err = std::max({std::fabs(t.r - 1.0 / 3.0),
                                     std::fabs(t.D - kSqrt83), std::fabs(t.R - 1.0)});
        ok = err <= 1e-9;
        std::ostringstream ss;
        ss << "max deviation " << err;
        return ss.str();
    });

    criterion(2, "equality case on the D-grid", 5.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("equality-cases", 20, 1), ok);
    });

    criterion(3, "oracle soundness, 1000 hulls", 30.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("oracle-soundness", 1000, 2027), ok);
    });

    criterion(4, "inradius minimality, 200 simplices", 30.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("minimality", 200, 11), ok);
    });

    criterion(5, "quasiconcavity, 200 configs", 60.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("quasiconcavity", 200, 5), ok);
    });

    criterion(6, "ratio constancy, 100 pairs", 30.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("ratio-constancy", 100, 17), ok);
    });

    criterion(7, "star-shape affinity, 50 bodies", 10.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("starshape", 50, 23), ok);
    });

    criterion(8, "inradius-profile monotonicity", 5.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("profile-monotonicity", 20, 0), ok);
    });

    criterion(9, "closed-form vs LP inradius, 50 grid", 10.0, [](bool& ok) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double d = 8.0 / 3.0 + (3.0 - 1e-3 - 8.0 / 3.0) * (i + 0.5) / 10.0;
            for (int j = 0; j < 5; ++j) {
                const double left = (4.0 - d) / 2.0, right = d / 4.0;
                const double x = left + (right - left) * (j + 0.5) / 5.0;
                const double b = 2.0 * std::sqrt(x);
                const double a =
                    2.0 * std::sqrt(1.0 - ((d - 2.0) * (d - 2.0) / 4.0) / (1.0 - x));
                const double closed = rdr::closed_form_inradius(a, b, 1.0);
                const double lp =
                    rdr::inradius_euclidean(rdr::hull_facets(rdr::special_simplex({a, b, 1.0})))
                        .radius;
                worst = std::max(worst, std::fabs(closed - lp));
            }
        }
        ok = worst <= 1e-8;
        std::ostringstream ss;
        ss << "worst |closed - lp| = " << worst;
        return ss.str();
    });

    criterion(10, "strict growth under strict inclusion", 10.0, [](bool& ok) {
        return suite_detail(rdr::run_suite("strict-monotonicity", 100, 31), ok);
    });

    criterion(11, "figure reproduction", 10.0, [](bool& ok) {
        const int n = 100;
        const auto boundary = rdr::boundary_polyline(n);

        // endpoint agreement of consecutive arcs, cyclically
        double worst_gap = 0.0;
        for (int arc = 0; arc < 5; ++arc) {
            const auto& last = boundary[arc * n + n - 1].point;
            const auto& next = boundary[((arc + 1) % 5) * n].point;
            worst_gap = std::max({worst_gap, std::fabs(last.x - next.x),
                                  std::fabs(last.y - next.y)});
        }

        // every sampled point lies on the feasible side of every arc
        const auto rows = rdr::sample_diagram(rdr::sample_families(), 40, 77);
        double worst_side = 0.0;
        for (const auto& row : rows) {
            worst_side = std::max(worst_side, -row.x);                       // left edge
            worst_side = std::max(worst_side, row.y - 1.0);                  // top
            worst_side = std::max(worst_side, std::sqrt(2.0 / 3.0) - row.y); // jung floor
            worst_side = std::max(worst_side, (1.0 + row.x) / 2.0 - row.y);  // concentricity
            if (2.0 * row.y <= kSqrt3)                                       // lower bound
                worst_side =
                    std::max(worst_side, rdr::new_inequality_rhs(2.0 * row.y, 1.0) - row.x);
        }

        // end-to-end SVG through the public writer
        const char* svg_path = "/tmp/rdr_acceptance_diagram.svg";
        {
            std::ofstream svg(svg_path);
            rdr::render_svg(rows, boundary, svg);
        }
        std::ifstream in(svg_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        const std::string text = ss.str();
        const bool svg_ok = text.rfind("<?xml", 0) == 0 &&
                            text.find("</svg>") != std::string::npos &&
                            text.find("<polyline") != std::string::npos;

        ok = worst_gap <= 1e-12 && worst_side <= 1e-8 && svg_ok;
        std::ostringstream detail;
        detail << "arc gap " << worst_gap << ", worst infeasibility " << worst_side;
        return detail.str();
    });

    std::printf("acceptance: %d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
