#include "rdr/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "rdr/errors.hpp"
#include "rdr/lp.hpp"
#include "rdr/tolerances.hpp"

namespace rdr {

namespace {

// splitmix64: cheap deterministic shuffle source for the move-to-front pass.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Smallest ball with the given affinely independent points on its boundary:
// the circumsphere within their affine hull. Returns nullopt when the Gram
// system is numerically singular.
std::optional<Ball> ball_on_boundary(const std::vector<Vec>& support) {
    if (support.empty()) return Ball{Vec(), -1.0}; // contains nothing
    const std::size_t k = support.size() - 1;
    if (k == 0) return Ball{support[0], 0.0};

    std::vector<Vec> u;
    for (std::size_t i = 1; i <= k; ++i) u.push_back(support[i] - support[0]);
    std::vector<std::vector<double>> gram(k, std::vector<double>(k));
    std::vector<double> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = 2.0 * dot(u[i], u[j]);
        rhs[i] = dot(u[i], u[i]);
    }
    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(gram[r][col]) > std::fabs(gram[piv][col])) piv = r;
        if (std::fabs(gram[piv][col]) < 1e-12) return std::nullopt;
        std::swap(gram[piv], gram[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = gram[r][col] / gram[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < k; ++c) gram[r][c] -= f * gram[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    Vec center = support[0];
    for (std::size_t i = 0; i < k; ++i) center += (rhs[i] / gram[i][i]) * u[i];
    return Ball{center, dist(center, support[0])};
}

bool ball_contains(const Ball& b, const Vec& p) {
    if (b.radius < 0.0) return false;
    const double slack = 1e-10 * std::max(1.0, b.radius);
    return dist(b.center, p) <= b.radius + slack;
}

Ball move_to_front_ball(std::vector<const Vec*>& pts, std::size_t n,
                        std::vector<Vec>& support, std::size_t d) {
    Ball ball = ball_on_boundary(support).value_or(Ball{Vec(), -1.0});
    if (support.size() == d + 1) return ball;
    for (std::size_t i = 0; i < n; ++i) {
        if (ball_contains(ball, *pts[i])) continue;
        support.push_back(*pts[i]);
        ball = move_to_front_ball(pts, i, support, d);
        support.pop_back();
        const Vec* moved = pts[i];
        for (std::size_t j = i; j > 0; --j) pts[j] = pts[j - 1];
        pts[0] = moved;
    }
    return ball;
}

// Exhaustive minimum over all support subsets of size <= d+1. Used both as
// the validation pass for small inputs and as a fallback.
Ball brute_force_ball(const std::vector<Vec>& pts, std::size_t d) {
    const std::size_t n = pts.size();
    Ball best{pts[0], std::numeric_limits<double>::infinity()};
    std::vector<std::size_t> idx;
    auto consider = [&](const std::vector<std::size_t>& subset) {
        std::vector<Vec> sup;
        for (std::size_t i : subset) sup.push_back(pts[i]);
        auto b = ball_on_boundary(sup);
        if (!b || b->radius >= best.radius) return;
        for (const Vec& p : pts)
            if (dist(b->center, p) > b->radius + 1e-9) return;
        best = *b;
    };
    // enumerate subsets of sizes 1..d+1
    const std::size_t kmax = std::min(n, d + 1);
    std::vector<std::size_t> stack;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!stack.empty()) consider(stack);
        if (stack.size() == kmax) return;
        for (std::size_t i = start; i < n; ++i) {
            stack.push_back(i);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

} // namespace

bool ContainmentCertificate::valid() const {
    return residual <= tolerances().certificate;
}

Ball circumball(const VBody& body, std::uint64_t seed) {
    const auto& verts = body.vertices();
    const std::size_t d = body.dim();
    if (verts.size() == 1) return {verts[0], 0.0};

    std::vector<const Vec*> pts(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) pts[i] = &verts[i];
    // Fisher-Yates driven by splitmix64 so results do not depend on any
    // library distribution implementation.
    std::uint64_t state = seed;
    for (std::size_t i = pts.size(); i > 1; --i) {
        state = mix64(state);
        std::swap(pts[i - 1], pts[state % i]);
    }

    std::vector<Vec> support;
    Ball ball = move_to_front_ball(pts, pts.size(), support, d);

    if (verts.size() <= 10) {
        const Ball checked = brute_force_ball(verts, d);
        if (checked.radius < ball.radius - 1e-12) ball = checked;
    }
    return ball;
}

Ball circumradius(const VBody& body) { return circumball(body); }

DiameterResult diameter(const VBody& body) {
    const auto& verts = body.vertices();
    DiameterResult best{0.0, verts[0], verts[0]};
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const double dij = dist(verts[i], verts[j]);
            if (dij > best.value + 1e-15) {
                best = {dij, verts[i], verts[j]};
            } else if (std::fabs(dij - best.value) <= 1e-15) {
                // lexicographic tie-break on the pair
                auto less = [](const Vec& a, const Vec& b) {
                    for (std::size_t c = 0; c < a.dim(); ++c) {
                        if (a[c] < b[c]) return true;
                        if (a[c] > b[c]) return false;
                    }
                    return false;
                };
                if (less(verts[i], best.first) ||
                    (!less(best.first, verts[i]) && less(verts[j], best.second)))
                    best = {best.value, verts[i], verts[j]};
            }
        }
    }
    return best;
}

InradiusResult inradius_euclidean(const HBody& body) {
    return inradius_gauge(body, Gauge::ball(body.dim()));
}

InradiusResult inradius_gauge(const HBody& body, const Gauge& gauge) {
    const std::size_t d = body.dim();
    if (gauge.dim() != d) throw DimensionMismatch("inradius_gauge");

    // Variables (t, rho): translation plus dilation factor.
    LPProblem lp(d + 1);
    lp.objective[d] = 1.0;
    for (const Halfspace& h : body.halfspaces()) {
        std::vector<double> row = h.normal.coords();
        row.push_back(gauge.support(h.normal));
        lp.add_ineq(std::move(row), h.offset);
    }
    {
        std::vector<double> row(d + 1, 0.0);
        row[d] = -1.0;
        lp.add_ineq(std::move(row), 0.0); // rho >= 0
    }

    const LPSolution sol = solve_lp(lp);
    if (sol.status == LPStatus::Unbounded)
        throw DegenerateBody("inradius: body is unbounded");
    if (sol.status == LPStatus::Infeasible)
        throw DegenerateBody("inradius: empty body");
    if (sol.value < 1e-13)
        throw DegenerateBody("inradius: body has empty interior");

    Vec center(d);
    for (std::size_t c = 0; c < d; ++c) center[c] = sol.x[c];
    return {sol.value, center};
}

ContainmentCertificate optimal_containment_certificate(const VBody& body) {
    const std::size_t d = body.dim();
    const Ball ball = circumball(body);
    if (ball.radius <= 0.0)
        throw DomainError("certificate requires positive circumradius");

    // The certificate targets the origin-centered unit ball: the caller
    // presents the body normalized to its circumball, and the contact points
    // are the vertices on the unit sphere. 0 in conv(contacts) together with
    // containment is exactly optimal containment in the ball; re-deriving
    // the center here would make the test vacuous.
    std::vector<Vec> contacts;
    for (const Vec& v : body.vertices())
        if (std::fabs(norm(v) - 1.0) <= tolerances().contact) contacts.push_back(v);
    if (contacts.empty())
        throw NoContacts("no vertex on the unit circumsphere within tolerance; "
                         "normalize the body to its circumball first");

    // minimize s  s.t.  -s <= (sum_i lambda_i p_i)_c <= s, sum lambda = 1,
    // lambda >= 0. The optimum is the smallest max-norm of a convex
    // combination; it is zero exactly when 0 lies in conv(contacts).
    const std::size_t k = contacts.size();
    LPProblem lp(k + 1);
    lp.objective[k] = -1.0; // maximize -s
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<double> row(k + 1, 0.0);
        for (std::size_t i = 0; i < k; ++i) row[i] = contacts[i][c];
        row[k] = -1.0;
        lp.add_ineq(row, 0.0);
        for (std::size_t i = 0; i < k; ++i) row[i] = -contacts[i][c];
        lp.add_ineq(std::move(row), 0.0);
    }
    {
        std::vector<double> row(k + 1, 0.0);
        std::fill(row.begin(), row.begin() + k, 1.0);
        lp.add_eq(std::move(row), 1.0);
    }
    for (std::size_t i = 0; i <= k; ++i) {
        std::vector<double> row(k + 1, 0.0);
        row[i] = -1.0;
        lp.add_ineq(std::move(row), 0.0);
    }

    const LPSolution sol = solve_lp(lp);
    if (sol.status != LPStatus::Optimal)
        throw NumericalFailure("certificate LP did not solve");

    ContainmentCertificate cert;
    cert.contact_points = contacts;
    cert.convex_coefficients.assign(sol.x.begin(), sol.x.begin() + k);
    Vec combo(d);
    for (std::size_t i = 0; i < k; ++i) combo += cert.convex_coefficients[i] * contacts[i];
    cert.residual = norm(combo);
    return cert;
}

double jung_lower_bound(double R, std::size_t n) {
    if (R < 0.0) throw DomainError("jung_lower_bound: negative circumradius");
    if (n == 0) throw DomainError("jung_lower_bound: dimension must be >= 1");
    return R * std::sqrt(2.0 * (static_cast<double>(n) + 1.0) / static_cast<double>(n));
}

FunctionalTriple rounded_functionals(const VBody& body, double rho) {
    if (rho < 0.0) throw DomainError("rounded_functionals: negative radius");
    const double r = inradius_euclidean(hull_facets(body)).radius;
    const double D = diameter(body).value;
    const double R = circumball(body).radius;
    return {r + rho, D + 2.0 * rho, R + rho};
}

FunctionalTriple functional_triple(const VBody& body) {
    FunctionalTriple t;
    t.D = diameter(body).value;
    t.R = circumball(body).radius;
    t.r = affine_dimension(body) == body.dim()
              ? inradius_euclidean(hull_facets(body)).radius
              : 0.0;
    return t;
}

} // namespace rdr
