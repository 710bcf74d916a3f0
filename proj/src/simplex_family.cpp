#include "rdr/simplex_family.hpp"

#include <algorithm>
#include <cmath>

#include "rdr/errors.hpp"
#include "rdr/lp.hpp"
#include "rdr/tolerances.hpp"

namespace rdr {

namespace {

const double kDMin = std::sqrt(8.0 / 3.0);
const double kDMax = std::sqrt(3.0);
constexpr double kEdgeSlack = 1e-12; // admits closed interval endpoints stored as doubles

// Orthonormal basis of aff(facet) - facet[0]; nullopt-free, throws on
// dependence below tolerance.
Vec normal_of_facet(const std::vector<Vec>& facet) {
    const std::size_t d = facet[0].dim();
    std::vector<Vec> basis;
    for (std::size_t i = 1; i < facet.size(); ++i) {
        Vec u = facet[i] - facet[0];
        for (const Vec& b : basis) u -= dot(u, b) * b;
        if (norm(u) <= 1e-9)
            throw DegenerateBody("facet points are affinely dependent");
        basis.push_back(normalized(u));
    }
    // Any vector orthogonal to the basis spans the normal line. Start from
    // the coordinate direction least aligned with the facet.
    for (std::size_t c = 0; c < d; ++c) {
        Vec u(d);
        u[c] = 1.0;
        for (const Vec& b : basis) u -= dot(u, b) * b;
        if (norm(u) > 1e-6) return normalized(u);
    }
    throw DegenerateBody("facet spans the whole space");
}

} // namespace

void MovingVertexConfig::validate() const {
    const std::size_t d = p0.dim();
    if (p1.dim() != d) throw DimensionMismatch("MovingVertexConfig: apex dims");
    if (facet.size() != d)
        throw DomainError("MovingVertexConfig: facet needs exactly dim points");
    for (const Vec& v : facet)
        if (v.dim() != d) throw DimensionMismatch("MovingVertexConfig: facet dims");
    const Vec n = facet_normal();
    const double h0 = dot(n, p0 - facet[0]);
    const double h1 = dot(n, p1 - facet[0]);
    if (std::fabs(h0) <= 1e-9 || std::fabs(h1) <= 1e-9 || h0 * h1 <= 0.0)
        throw DomainError("apexes must lie strictly on the same open side of the facet");
}

Vec MovingVertexConfig::facet_normal() const {
    Vec n = normal_of_facet(facet);
    if (dot(n, p0 - facet[0]) < 0.0) n = -n;
    return n;
}

double MovingVertexConfig::height0() const {
    return dot(facet_normal(), p0 - facet[0]);
}

double MovingVertexConfig::height1() const {
    return dot(facet_normal(), p1 - facet[0]);
}

double SpecialSimplexParams::diameter() const {
    const double ha = std::sqrt(std::max(0.0, R * R - a * a / 4.0));
    const double hb = std::sqrt(std::max(0.0, R * R - b * b / 4.0));
    return std::sqrt(2.0 * R * R + 2.0 * ha * hb);
}

void SpecialSimplexParams::validate() const {
    if (!(R > 0.0)) throw DomainError("special simplex: R must be positive");
    if (!(a > 0.0) || a > b + kEdgeSlack)
        throw DomainError("special simplex: need 0 < a <= b");
    if (a > 2.0 * R + kEdgeSlack || b > 2.0 * R + kEdgeSlack)
        throw DomainError("special simplex: edges exceed the sphere diameter");
    if (b > diameter() + kEdgeSlack)
        throw DomainError("special simplex: b exceeds the derived diameter");
}

std::pair<Vec, Vec> base_pair(double D) {
    if (!(D >= kDMin - kEdgeSlack) || !(D < kDMax))
        throw DomainError("base_pair: D outside [sqrt(8/3), sqrt(3))");
    const double d2 = D * D;
    Vec p3{-std::sqrt(std::max(0.0, d2 - d2 * d2 / 4.0)), d2 / 2.0 - 1.0, 0.0};
    Vec p4{0.0, -1.0, 0.0};
    return {p3, p4};
}

std::pair<Vec, Vec> star_points(double D) {
    if (!(D >= kDMin - kEdgeSlack) || !(D <= kDMax + kEdgeSlack))
        throw DomainError("star_points: D outside [sqrt(8/3), sqrt(3)]");
    const double d2 = D * D;
    const double x = (D * d2 - 2.0 * D) / (2.0 * std::sqrt(4.0 - d2));
    const double y = d2 / 2.0 - 1.0;
    const double z2 = 1.0 - x * x - y * y; // vanishes exactly at D = sqrt(3)
    const double z = std::sqrt(std::max(0.0, z2));
    return {Vec{x, y, z}, Vec{x, y, -z}};
}

VBody k_alpha(const MovingVertexConfig& config, double alpha) {
    config.validate();
    if (alpha < 0.0 || alpha > 1.0) throw DomainError("k_alpha: alpha outside [0,1]");
    std::vector<Vec> verts = config.facet;
    verts.push_back((1.0 - alpha) * config.p0 + alpha * config.p1);
    VBody body(config.p0.dim(), std::move(verts));
    if (affine_dimension(body) != body.dim())
        throw DegenerateBody("k_alpha: interpolated apex hit the facet plane");
    return body;
}

VBody special_simplex(const SpecialSimplexParams& params) {
    params.validate();
    const double ha = std::sqrt(std::max(0.0, params.R * params.R - params.a * params.a / 4.0));
    const double hb = std::sqrt(std::max(0.0, params.R * params.R - params.b * params.b / 4.0));
    std::vector<Vec> verts{
        Vec{0.0, params.a / 2.0, ha},
        Vec{0.0, -params.a / 2.0, ha},
        Vec{params.b / 2.0, 0.0, -hb},
        Vec{-params.b / 2.0, 0.0, -hb},
    };
    return VBody(3, std::move(verts));
}

double short_edge_for_five_diametral(double D, double R) {
    if (!(R > 0.0)) throw DomainError("short_edge: R must be positive");
    const double t2 = (D / R) * (D / R);
    if (!(t2 >= 8.0 / 3.0 - kEdgeSlack) || !(t2 < 3.0))
        throw DomainError("short_edge: D/R outside [sqrt(8/3), sqrt(3))");
    const double x = 1.0 - ((t2 - 2.0) * (t2 - 2.0) / 4.0) / (1.0 - t2 / 4.0);
    return 2.0 * R * std::sqrt(std::max(0.0, x));
}

VBody isosceles_simplex(double D, double R) {
    return special_simplex({short_edge_for_five_diametral(D, R), D, R});
}

double closed_form_inradius(double a, double b, double R) {
    SpecialSimplexParams params{a, b, R};
    params.validate();
    const double ha = std::sqrt(std::max(0.0, R * R - a * a / 4.0));
    const double hb = std::sqrt(std::max(0.0, R * R - b * b / 4.0));
    const double D2 = 2.0 * R * R + 2.0 * ha * hb;
    return (ha + hb) * a * b /
           (2.0 * a * std::sqrt(D2 - a * a / 4.0) + 2.0 * b * std::sqrt(D2 - b * b / 4.0));
}

double isosceles_inradius(double D, double R) {
    if (!(R > 0.0)) throw DomainError("isosceles_inradius: R must be positive");
    const double t = D / R;
    const double t2 = t * t;
    if (!(t >= kDMin - kEdgeSlack) || !(t <= kDMax + kEdgeSlack))
        throw DomainError("isosceles_inradius: D/R outside [sqrt(8/3), sqrt(3)]");
    const double root = std::sqrt(std::max(0.0, 3.0 - t2));
    return R * t2 * root / (4.0 * root - std::sqrt(3.0) * (t2 - 4.0));
}

double inradius_profile(double x, double d) {
    if (!(d >= 8.0 / 3.0 - kEdgeSlack) || !(d < 3.0))
        throw DomainError("inradius_profile: d outside [8/3, 3)");
    if (!(x >= (4.0 - d) / 2.0 - kEdgeSlack) || !(x <= d / 4.0 + kEdgeSlack))
        throw DomainError("inradius_profile: x outside [(4-d)/2, d/4]");
    const double t1 = std::sqrt(1.0 / x) * std::sqrt(std::max(0.0, x * (1.0 - d) + d * d / 4.0));
    const double t2 = (1.0 - x) * std::sqrt(4.0 * (d - x) / (4.0 * (d - x) - d * d));
    return (d / 2.0 - x) / (t1 + t2);
}

ProfileSlopeTerms inradius_profile_slope(double x, double d) {
    if (!(d >= 8.0 / 3.0 - kEdgeSlack) || !(d < 3.0))
        throw DomainError("inradius_profile_slope: d outside [8/3, 3)");
    // Natural domain: every radicand is positive on (0, d/4], which also
    // admits the curvature probe point x = 1/2 below (4-d)/2.
    if (!(x > 0.0) || !(x <= d / 4.0 + kEdgeSlack))
        throw DomainError("inradius_profile_slope: x outside (0, d/4]");
    ProfileSlopeTerms out;
    out.g = ((16.0 * d - 16.0) * x * x - 6.0 * d * d * x + d * d * d) /
            (8.0 * x * std::sqrt(x) * std::sqrt(4.0 * x + d * d - 4.0 * d * x));
    const double dx = d - x;
    const double w = 4.0 * dx - d * d;
    out.h = ((d - 2.0) * dx * w - (d / 2.0 - x) * (1.0 - x) * d * d) /
            (std::sqrt(dx) * std::sqrt(w) * w);
    out.q = (-6.0 * d * d + 16.0 * d - 32.0) * x * x +
            (11.0 * d * d * d - 50.0 * d * d + 48.0 * d) * x -
            4.0 * d * d * d * d + 17.0 * d * d * d - 16.0 * d * d;
    return out;
}

bool cp_hull_member(const CPHullQuery& query) {
    const std::size_t d = query.query.dim();
    if (query.generators.empty() || query.anchors.empty())
        throw DomainError("cp_hull_member: needs generators and anchors");
    auto on_sphere = [](const Vec& v) { return std::fabs(norm(v) - 1.0) <= 1e-8; };
    if (!on_sphere(query.query)) throw DomainError("cp_hull_member: query off the sphere");
    for (const Vec& v : query.generators)
        if (!on_sphere(v)) throw DomainError("cp_hull_member: generator off the sphere");
    for (const Vec& v : query.anchors)
        if (!on_sphere(v)) throw DomainError("cp_hull_member: anchor off the sphere");

    const std::size_t k = query.generators.size();
    const std::size_t m = query.anchors.size();
    // Variables: lambda_j (m of them), then beta_ij stored as i*m + j.
    const std::size_t nv = m + k * m;
    LPProblem lp(nv);

    for (std::size_t c = 0; c < d; ++c) {
        std::vector<double> row(nv, 0.0);
        for (std::size_t j = 0; j < m; ++j) row[j] = query.anchors[j][c];
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j)
                row[m + i * m + j] = query.generators[i][c] - query.anchors[j][c];
        lp.add_eq(std::move(row), query.query[c]);
    }
    {
        std::vector<double> row(nv, 0.0);
        std::fill(row.begin(), row.begin() + m, 1.0);
        lp.add_eq(std::move(row), 1.0);
    }
    for (std::size_t j = 0; j < m; ++j) { // lambda_j - sum_i beta_ij <= 0
        std::vector<double> row(nv, 0.0);
        row[j] = 1.0;
        for (std::size_t i = 0; i < k; ++i) row[m + i * m + j] = -1.0;
        lp.add_ineq(std::move(row), 0.0);
    }
    for (std::size_t v = 0; v < nv; ++v) { // nonnegativity
        std::vector<double> row(nv, 0.0);
        row[v] = -1.0;
        lp.add_ineq(std::move(row), 0.0);
    }
    {
        std::vector<double> row(nv, 0.0);
        std::fill(row.begin() + m, row.end(), 1.0);
        lp.add_ineq(std::move(row), 1e6); // keeps lambda_j = 0 rays bounded
    }

    return solve_lp(lp).status == LPStatus::Optimal;
}

std::pair<Vec, Vec> sphere_distance_circle_intersection(const Vec& p, const Vec& q, double D) {
    // Points x with |x|=1, |x-p|=|x-q|=D, i.e. p.x = q.x = 1 - D^2/2.
    const double c = 1.0 - D * D / 2.0;
    const double pp = dot(p, p), qq = dot(q, q), pq = dot(p, q);
    const double det = pp * qq - pq * pq;
    if (std::fabs(det) < 1e-12)
        throw DomainError("circle intersection: chord endpoints are parallel");
    const double alpha = c * (qq - pq) / det;
    const double beta = c * (pp - pq) / det;
    const Vec base = alpha * p + beta * q;
    const Vec w = cross(p, q);
    const double t2 = (1.0 - norm2(base)) / norm2(w);
    if (t2 < -1e-12) throw DomainError("circle intersection: circles do not meet");
    const double t = std::sqrt(std::max(0.0, t2));
    return {base + t * w, base - t * w};
}

} // namespace rdr
