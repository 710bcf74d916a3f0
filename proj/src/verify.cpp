#include "rdr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "rdr/body.hpp"
#include "rdr/diagram.hpp"
#include "rdr/errors.hpp"
#include "rdr/functionals.hpp"
#include "rdr/linalg.hpp"
#include "rdr/rng.hpp"
#include "rdr/simplex_family.hpp"
#include "rdr/tolerances.hpp"

namespace rdr {

namespace {

const double kSqrt83 = std::sqrt(8.0 / 3.0);
const double kSqrt3 = std::sqrt(3.0);

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string desc_vec(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ",";
        s += fmt(v[i]);
    }
    return s + "]";
}

std::string desc_body(const VBody& b) {
    std::string s = "[";
    for (std::size_t i = 0; i < b.vertices().size(); ++i) {
        if (i) s += ",";
        s += desc_vec(b.vertices()[i]);
    }
    return s + "]";
}

// --- randomized fixtures ---------------------------------------------------

// Polytope gauge: hull of 6..10 unit-sphere points recentred at their
// centroid. Sphere sampling avoids needle-shaped gauges.
Gauge random_polytope_gauge(Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::size_t nv = 6 + rng.below(5);
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < nv; ++i) pts.push_back(rng.unit_sphere(3));
        Vec centroid(3);
        for (const Vec& p : pts) centroid += p;
        centroid *= 1.0 / static_cast<double>(nv);
        for (Vec& p : pts) p -= centroid;
        VBody body(3, std::move(pts));
        if (affine_dimension(body) == 3) return Gauge::polytope(std::move(body));
    }
    throw DegenerateBody("random gauge generation kept collapsing");
}

// Facet of 3 sphere points with pairwise distance >= 0.5; apexes at height
// >= 0.1 above its plane (same side), laterally near the facet.
MovingVertexConfig random_config(Rng& rng) {
    std::vector<Vec> facet;
    for (int attempt = 0; attempt < 256 && facet.size() < 3; ++attempt) {
        const Vec p = rng.unit_sphere(3);
        bool ok = true;
        for (const Vec& q : facet)
            if (dist(p, q) < 0.5) ok = false;
        if (ok) facet.push_back(p);
    }
    if (facet.size() < 3) throw DegenerateBody("facet sampling failed");

    MovingVertexConfig cfg;
    cfg.facet = facet;
    const Vec n = normalized(cross(facet[1] - facet[0], facet[2] - facet[0]));
    auto apex = [&](double h) {
        const double w1 = rng.uniform(-0.3, 1.3);
        const double w2 = rng.uniform(-0.3, 1.3 - w1);
        Vec base = facet[0] + w1 * (facet[1] - facet[0]) + w2 * (facet[2] - facet[0]);
        return base + h * n;
    };
    cfg.p0 = apex(rng.uniform(0.1, 1.2));
    cfg.p1 = apex(rng.uniform(0.1, 1.2));
    cfg.validate();
    return cfg;
}

InradiusResult simplex_inradius(const VBody& s, const Gauge& gauge) {
    return inradius_gauge(hull_facets(s), gauge);
}

// Barycentric coordinates of x in the simplex with the given vertices.
std::vector<double> barycentric(const std::vector<Vec>& verts, const Vec& x) {
    const std::size_t d = x.dim();
    std::vector<std::vector<double>> m(d + 1, std::vector<double>(verts.size()));
    std::vector<double> rhs(d + 1);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t j = 0; j < verts.size(); ++j) m[c][j] = verts[j][c];
        rhs[c] = x[c];
    }
    for (std::size_t j = 0; j < verts.size(); ++j) m[d][j] = 1.0;
    rhs[d] = 1.0;
    auto sol = solve_linear(std::move(m), std::move(rhs), 1e-12);
    if (!sol) throw DegenerateBody("barycentric: simplex is numerically flat");
    return *sol;
}

// --- individual suites ------------------------------------------------------

struct TrialContext {
    std::uint64_t seed = 0;
    std::vector<TrialFailure>* failures = nullptr;

    void fail(const std::string& desc, double slack) const {
        failures->push_back({seed, desc, slack});
    }
};

void trial_quasiconcavity(Rng& rng, const TrialContext& ctx) {
    const MovingVertexConfig cfg = random_config(rng);
    const Gauge gauge = random_polytope_gauge(rng);
    const double r0 = simplex_inradius(k_alpha(cfg, 0.0), gauge).radius;
    const double r1 = simplex_inradius(k_alpha(cfg, 1.0), gauge).radius;
    const double floor = std::min(r0, r1);

    double worst = std::numeric_limits<double>::infinity();
    double worst_alpha = 0.0;
    for (int i = 0; i < 21; ++i) {
        const double alpha = static_cast<double>(i) / 20.0;
        const double ra = simplex_inradius(k_alpha(cfg, alpha), gauge).radius;
        if (ra - floor < worst) {
            worst = ra - floor;
            worst_alpha = alpha;
        }
    }
    if (worst < -tolerances().tight)
        ctx.fail("facet=" + desc_body(VBody(3, cfg.facet)) + " p0=" + desc_vec(cfg.p0) +
                     " p1=" + desc_vec(cfg.p1) + " gauge=" + desc_body(gauge.poly()) +
                     " alpha=" + fmt(worst_alpha),
                 worst);
}

void trial_ratio_constancy(Rng& rng, const TrialContext& ctx) {
    MovingVertexConfig cfg = random_config(rng);
    const Gauge gauge = random_polytope_gauge(rng);
    const double r0 = simplex_inradius(k_alpha(cfg, 0.0), gauge).radius;

    // Rescale p1's height over the facet until both simplices have equal
    // gauge inradius (the inradius grows with the apex height).
    const Vec n = cfg.facet_normal();
    const Vec foot = cfg.p1 - cfg.height1() * n;
    auto with_height = [&](double h) {
        MovingVertexConfig c = cfg;
        c.p1 = foot + h * n;
        return c;
    };
    auto r1_of = [&](double h) {
        return simplex_inradius(k_alpha(with_height(h), 1.0), gauge).radius;
    };
    double lo = 0.02, hi = 0.5;
    while (r1_of(hi) < r0 && hi < 64.0) hi *= 2.0;
    if (r1_of(hi) < r0 || r1_of(lo) > r0)
        throw DegenerateBody("ratio trial: cannot bracket the equal-inradius height");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double rm = r1_of(mid);
        if (std::fabs(rm - r0) <= 1e-10) { lo = hi = mid; break; }
        (rm < r0 ? lo : hi) = mid;
        if (hi - lo < 1e-13) break;
    }
    cfg = with_height(0.5 * (lo + hi));

    const VBody k0 = k_alpha(cfg, 0.0);
    const VBody k1 = k_alpha(cfg, 1.0);
    const InradiusResult in0 = simplex_inradius(k0, gauge);
    const InradiusResult in1 = simplex_inradius(k1, gauge);

    // Probe interior gauge points; matched points r*v + c and r*v + d sit at
    // equal heights over the shared facet.
    const std::vector<Vec>& gv = gauge.poly().vertices();
    std::vector<double> ratios;
    for (int probe = 0; probe < 20; ++probe) {
        std::vector<double> w(gv.size());
        double total = 0.0;
        for (double& wi : w) total += (wi = 0.05 + rng.uniform01());
        Vec v(3);
        for (std::size_t i = 0; i < gv.size(); ++i) v += (w[i] / total) * gv[i];

        const auto lam = barycentric(k0.vertices(), in0.radius * v + in0.center);
        const auto mu = barycentric(k1.vertices(), in1.radius * v + in1.center);
        // apex coefficient is the last barycentric entry (facet, then apex)
        ratios.push_back(lam.back() / mu.back());
    }
    const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
    const double spread = *mx - *mn;
    const double expected = cfg.height1() / cfg.height0();
    const double off = std::fabs(0.5 * (*mn + *mx) - expected);
    if (spread > 1e-8 || off > 1e-7)
        ctx.fail("facet=" + desc_body(VBody(3, cfg.facet)) + " p0=" + desc_vec(cfg.p0) +
                     " p1=" + desc_vec(cfg.p1) + " gauge=" + desc_body(gauge.poly()) +
                     " spread=" + fmt(spread) + " expected=" + fmt(expected),
                 -std::max(spread, off));
}

void trial_extreme_minimization(Rng& rng, const TrialContext& ctx) {
    const MovingVertexConfig cfg = random_config(rng);
    const Gauge gauge = random_polytope_gauge(rng);
    const std::vector<Vec>& facet = cfg.facet;
    const Vec n = cfg.facet_normal();

    // Candidate apex polygon in a plane parallel to the facet.
    const double h = rng.uniform(0.4, 1.4);
    Vec center = (1.0 / 3.0) * (facet[0] + facet[1] + facet[2]) + h * n;
    Vec e1 = normalized(facet[1] - facet[0]);
    Vec e2 = cross(n, e1);
    std::vector<Vec> cloud;
    const std::size_t k = 4 + rng.below(4);
    for (std::size_t i = 0; i < k; ++i) {
        const double ang = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        const double rad = rng.uniform(0.2, 0.8);
        cloud.push_back(center + rad * std::cos(ang) * e1 + rad * std::sin(ang) * e2);
    }
    const VBody polygon = extreme_points(VBody(3, cloud));
    const std::vector<Vec>& pv = polygon.vertices();

    auto r_of_apex = [&](const Vec& p) {
        std::vector<Vec> verts = facet;
        verts.push_back(p);
        return simplex_inradius(VBody(3, std::move(verts)), gauge).radius;
    };

    double vertex_min = std::numeric_limits<double>::infinity();
    for (const Vec& p : pv) vertex_min = std::min(vertex_min, r_of_apex(p));

    double sample_min = std::numeric_limits<double>::infinity();
    Vec argmin = pv[0];
    for (int s = 0; s < 150; ++s) {
        std::vector<double> w(pv.size());
        double total = 0.0;
        for (double& wi : w) total += (wi = rng.uniform01());
        Vec p(3);
        for (std::size_t i = 0; i < pv.size(); ++i) p += (w[i] / total) * pv[i];
        const double r = r_of_apex(p);
        if (r < sample_min) {
            sample_min = r;
            argmin = p;
        }
    }
    const double slack = sample_min - vertex_min;
    if (slack < -1e-7)
        ctx.fail("facet=" + desc_body(VBody(3, facet)) + " polygon=" + desc_body(polygon) +
                     " gauge=" + desc_body(gauge.poly()) + " interior_argmin=" + desc_vec(argmin),
                 slack);
}

VBody random_inscribed_hull(Rng& rng, std::size_t min_v, std::size_t max_v) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        const std::size_t nv = min_v + rng.below(max_v - min_v + 1);
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < nv; ++i) pts.push_back(rng.unit_sphere(3));
        VBody body(3, std::move(pts));
        if (affine_dimension(body) != 3) continue;
        try {
            if (optimal_containment_certificate(body).valid()) return body;
        } catch (const NoContacts&) {
        }
    }
    throw DegenerateBody("could not sample an optimally contained hull");
}

void trial_starshape(Rng& rng, const TrialContext& ctx) {
    const VBody body = random_inscribed_hull(rng, 4, 10);
    const FunctionalTriple base = functional_triple(body);
    const DiagramPoint f0 = diagram_map(base);

    double worst = 0.0;
    double worst_lambda = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double lambda = static_cast<double>(i) / 10.0;
        const DiagramPoint p = starshape_combine(body, lambda).second;
        const double ex = (1.0 - lambda) * f0.x + lambda;
        const double ey = (1.0 - lambda) * f0.y + lambda;
        const double dev = std::max(std::fabs(p.x - ex), std::fabs(p.y - ey));
        if (dev > worst) {
            worst = dev;
            worst_lambda = lambda;
        }
    }
    if (worst > tolerances().tight)
        ctx.fail("body=" + desc_body(body) + " lambda=" + fmt(worst_lambda), -worst);
}

void trial_profile_monotonicity(double d, const TrialContext& ctx) {
    const double left = (4.0 - d) / 2.0;
    const double right = d / 4.0;

    const ProfileSlopeTerms at_left = inradius_profile_slope(left, d);
    if (std::fabs(at_left.g + at_left.h) > 1e-9)
        ctx.fail("d=" + fmt(d) + " g+h at left endpoint", -std::fabs(at_left.g + at_left.h));

    const double q_half = inradius_profile_slope(0.5, d).q;
    if (!(q_half < 0.0)) ctx.fail("d=" + fmt(d) + " q(1/2)", -q_half);
    const double fd = 1e-6;
    const double q_prime =
        (inradius_profile_slope(0.5 + fd, d).q - inradius_profile_slope(0.5 - fd, d).q) / (2.0 * fd);
    if (!(q_prime < 0.0)) ctx.fail("d=" + fmt(d) + " q'(1/2)", -q_prime);

    if (right - left < 1e-9) return; // degenerate interval at d = 8/3
    double prev = inradius_profile(left, d);
    for (int j = 1; j < 100; ++j) {
        const double x = left + (right - left) * static_cast<double>(j) / 99.0;
        const double cur = inradius_profile(x, d);
        if (cur - prev >= -1e-12) {
            ctx.fail("d=" + fmt(d) + " x=" + fmt(x) + " non-decreasing step", cur - prev);
            return;
        }
        prev = cur;
    }
}

void trial_equality_case(double D, const TrialContext& ctx) {
    const VBody s = isosceles_simplex(D);
    const double lp = inradius_euclidean(hull_facets(s)).radius;
    const double bound = new_inequality_rhs(D, 1.0);
    const double diff = std::fabs(lp - bound);
    if (diff > 1e-6)
        ctx.fail("D=" + fmt(D) + " lp=" + fmt(lp) + " bound=" + fmt(bound), -diff);
}

void trial_minimality(Rng& rng, const TrialContext& ctx) {
    // Random simplex inscribed in the unit sphere with the center in its
    // hull (hence circumradius exactly 1) and diameter below sqrt(3).
    // Uniform sphere quadruples land in that window far too rarely, so the
    // proposal perturbs the regular tetrahedron's directions; rejection
    // still enforces the actual constraints.
    const double s = 1.0 / kSqrt3;
    const Vec tetra_dirs[4] = {
        Vec{s, s, s}, Vec{s, -s, -s}, Vec{-s, s, -s}, Vec{-s, -s, s}};
    for (int attempt = 0; attempt < 500; ++attempt) {
        const double sigma = rng.uniform(0.0, 0.6);
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i) {
            Vec noise(3);
            for (int c = 0; c < 3; ++c) noise[c] = sigma * rng.normal();
            pts.push_back(normalized(tetra_dirs[i] + noise));
        }
        double D = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) D = std::max(D, dist(pts[i], pts[j]));
        if (D >= kSqrt3) continue;
        auto bary = [&]() -> std::optional<std::vector<double>> {
            std::vector<std::vector<double>> m(4, std::vector<double>(4));
            std::vector<double> rhs(4, 0.0);
            for (int c = 0; c < 3; ++c)
                for (int j = 0; j < 4; ++j) m[c][j] = pts[j][c];
            for (int j = 0; j < 4; ++j) m[3][j] = 1.0;
            rhs[3] = 1.0;
            return solve_linear(std::move(m), std::move(rhs), 1e-10);
        }();
        if (!bary) continue;
        bool center_inside = true;
        for (double w : *bary)
            if (w < 1e-6) center_inside = false;
        if (!center_inside) continue;

        const VBody s(3, pts);
        const double r = inradius_euclidean(hull_facets(s)).radius;
        const double bound = new_inequality_rhs(D, 1.0);
        if (r < bound - 1e-8)
            ctx.fail("simplex=" + desc_body(s) + " D=" + fmt(D) + " r=" + fmt(r) +
                         " bound=" + fmt(bound),
                     r - bound);
        return;
    }
    throw DegenerateBody("minimality trial: no admissible simplex sampled");
}

void trial_strict_monotonicity(Rng& rng, const TrialContext& ctx) {
    // Well-spread inscribed simplex, then a point clearly outside it.
    std::vector<Vec> pts;
    for (int attempt = 0; attempt < 2000 && pts.size() < 4; ++attempt) {
        const Vec p = rng.unit_sphere(3);
        bool ok = true;
        for (const Vec& q : pts)
            if (dist(p, q) < 0.9) ok = false;
        if (ok) pts.push_back(p);
    }
    if (pts.size() < 4) throw DegenerateBody("strict-monotonicity: sampling failed");
    const VBody s(3, pts);
    const HBody facets = hull_facets(s);

    Vec outside;
    double margin = 0.0;
    for (int attempt = 0; attempt < 2000; ++attempt) {
        const Vec q = rng.unit_sphere(3);
        double viol = -std::numeric_limits<double>::infinity();
        for (const Halfspace& h : facets.halfspaces())
            viol = std::max(viol, dot(h.normal, q) - h.offset);
        if (viol >= 0.1) {
            outside = q;
            margin = viol;
            break;
        }
    }
    if (margin < 0.1) throw DegenerateBody("strict-monotonicity: no outside point");

    std::vector<Vec> grown = pts;
    grown.push_back(outside);
    const double r_small = inradius_euclidean(facets).radius;
    const double r_big = inradius_euclidean(hull_facets(VBody(3, grown))).radius;
    if (!(r_big > r_small + 1e-12))
        ctx.fail("simplex=" + desc_body(s) + " q=" + desc_vec(outside), r_big - r_small);
}

void trial_oracle_soundness(Rng& rng, const TrialContext& ctx) {
    const std::size_t nv = 4 + rng.below(9);
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < nv; ++i) pts.push_back(rng.unit_ball(3));
    const VBody body(3, std::move(pts));
    const FunctionalTriple t = functional_triple(body);
    const FeasibilityVerdict v = check_complete_system(t);

    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [id, slack] : v.evaluated) worst = std::min(worst, slack);
    if (worst < -1e-8)
        ctx.fail("body=" + desc_body(body) + " r=" + fmt(t.r) + " D=" + fmt(t.D) +
                     " R=" + fmt(t.R),
                 worst);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "quasiconcavity",   "ratio-constancy", "extreme-minimization",
        "starshape",        "profile-monotonicity", "equality-cases",
        "minimality",       "strict-monotonicity",   "oracle-soundness"};
    return names;
}

SuiteReport run_suite(const std::string& suite_id, int trials, std::uint64_t root_seed) {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), suite_id) == known.end())
        throw UnknownName("run_suite: unknown suite '" + suite_id + "'");
    if (trials < 1) throw DomainError("run_suite: trials must be >= 1");

    SuiteReport report;
    report.suite = suite_id;
    report.trials = trials;
    const auto t0 = std::chrono::steady_clock::now();

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed = derive_seed(root_seed, static_cast<std::uint64_t>(t));
        TrialContext ctx{seed, &report.failures};
        Rng rng(seed);
        try {
            if (suite_id == "quasiconcavity") {
                trial_quasiconcavity(rng, ctx);
            } else if (suite_id == "ratio-constancy") {
                trial_ratio_constancy(rng, ctx);
            } else if (suite_id == "extreme-minimization") {
                trial_extreme_minimization(rng, ctx);
            } else if (suite_id == "starshape") {
                trial_starshape(rng, ctx);
            } else if (suite_id == "profile-monotonicity") {
                // d-grid over [8/3, 3), left endpoint included
                const double d = 8.0 / 3.0 + (3.0 - 8.0 / 3.0) * t / trials;
                trial_profile_monotonicity(d, ctx);
            } else if (suite_id == "equality-cases") {
                const double hi = kSqrt3 - 1e-3;
                const double D = trials == 1 ? kSqrt83
                                             : kSqrt83 + (hi - kSqrt83) * t / (trials - 1);
                trial_equality_case(D, ctx);
            } else if (suite_id == "minimality") {
                trial_minimality(rng, ctx);
            } else if (suite_id == "strict-monotonicity") {
                trial_strict_monotonicity(rng, ctx);
            } else { // oracle-soundness
                trial_oracle_soundness(rng, ctx);
            }
        } catch (const Error&) {
            ++report.skipped; // precondition violation, not a counterexample
        }
    }

    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string report_to_json(const SuiteReport& r) {
    std::ostringstream out;
    out << "{\"suite\":\"" << r.suite << "\",\"trials\":" << r.trials
        << ",\"skipped\":" << r.skipped << ",\"failures\":[";
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
        const TrialFailure& f = r.failures[i];
        if (i) out << ",";
        std::string escaped;
        for (char c : f.description) {
            if (c == '"' || c == '\\') escaped += '\\';
            escaped += c;
        }
        out << "{\"seed\":" << f.seed << ",\"description\":\"" << escaped
            << "\",\"worst_slack\":" << fmt(f.worst_slack) << "}";
    }
    out << "],\"elapsed_s\":" << fmt(r.elapsed_s) << "}";
    return out.str();
}

} // namespace rdr
