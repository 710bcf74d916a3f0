#include "rdr/body.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "rdr/errors.hpp"
#include "rdr/linalg.hpp"
#include "rdr/lp.hpp"
#include "rdr/tolerances.hpp"

namespace rdr {

namespace {

// Visits all k-subsets of {0,..,n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

// Unit normal of the hyperplane through dim points, or nullopt when the
// points are affinely dependent. Computed as the (one-dimensional) null
// space of the difference matrix.
std::optional<Vec> hyperplane_normal(const std::vector<const Vec*>& pts, double tol) {
    const std::size_t d = pts[0]->dim();
    // Rows: p_k - p_0, k = 1..d-1. Reduce and read the null direction.
    std::vector<std::vector<double>> m(d - 1, std::vector<double>(d));
    for (std::size_t k = 1; k < d; ++k)
        for (std::size_t c = 0; c < d; ++c) m[k - 1][c] = (*pts[k])[c] - (*pts[0])[c];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < d - 1; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < d - 1; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[best][col])) best = r;
        if (std::fabs(m[best][col]) < tol) continue;
        std::swap(m[best], m[row]);
        for (std::size_t r = 0; r < d - 1; ++r) {
            if (r == row) continue;
            const double f = m[r][col] / m[row][col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < d; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row < d - 1) return std::nullopt; // points affinely dependent

    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    Vec normal(d);
    normal[free_col] = 1.0;
    for (std::size_t r = 0; r < d - 1; ++r)
        normal[pivot_col[r]] = -m[r][free_col] / m[r][pivot_col[r]];
    return normalized(normal);
}

} // namespace

VBody::VBody(std::size_t dim, std::vector<Vec> vertices) : dim_(dim) {
    if (dim == 0) throw DomainError("VBody: dimension must be >= 1");
    if (vertices.empty()) throw DomainError("VBody: needs at least one vertex");
    const double dd = tolerances().dedupe;
    for (const Vec& v : vertices) {
        if (v.dim() != dim) throw DimensionMismatch("VBody: vertex dimension");
        if (!all_finite(v)) throw DomainError("VBody: non-finite coordinate");
        bool dup = false;
        for (const Vec& w : vertices_)
            if (dist(v, w) <= dd) { dup = true; break; }
        if (!dup) vertices_.push_back(v);
    }
}

HBody::HBody(std::size_t dim, std::vector<Halfspace> halfspaces) : dim_(dim) {
    if (dim == 0) throw DomainError("HBody: dimension must be >= 1");
    for (Halfspace& h : halfspaces) {
        if (h.normal.dim() != dim) throw DimensionMismatch("HBody: normal dimension");
        const double n = norm(h.normal);
        if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(h.offset))
            throw DomainError("HBody: invalid half-space");
        h.normal *= 1.0 / n;
        h.offset /= n;
        halfspaces_.push_back(std::move(h));
    }
}

Gauge Gauge::ball(std::size_t dim) {
    Gauge g;
    g.dim_ = dim;
    return g;
}

Gauge Gauge::polytope(VBody body) {
    if (affine_dimension(body) != body.dim())
        throw DegenerateBody("gauge polytope must be full-dimensional");
    Gauge g;
    g.dim_ = body.dim();
    g.poly_ = std::move(body);
    return g;
}

double Gauge::support(const Vec& direction) const {
    if (direction.dim() != dim_) throw DimensionMismatch("Gauge::support");
    if (is_ball()) return norm(direction);
    return support_value(*poly_, direction).value;
}

SupportResult support_value(const VBody& body, const Vec& direction) {
    require_same_dim(direction, body.vertices()[0], "support_value");
    SupportResult best{-std::numeric_limits<double>::infinity(), {}};
    for (const Vec& v : body.vertices()) {
        const double s = dot(direction, v);
        if (s > best.value) best = {s, v};
    }
    return best;
}

std::size_t affine_dimension(const VBody& body) {
    const double tol = tolerances().geometric;
    std::vector<Vec> basis; // orthonormal directions spanning aff(vertices)-v0
    const Vec& v0 = body.vertices()[0];
    for (const Vec& v : body.vertices()) {
        Vec u = v - v0;
        for (const Vec& b : basis) u -= dot(u, b) * b;
        if (norm(u) > tol) basis.push_back(normalized(u));
    }
    return basis.size();
}

HBody hull_facets(const VBody& body) {
    const std::size_t d = body.dim();
    const auto& verts = body.vertices();
    const std::size_t n = verts.size();
    const double tol = tolerances().geometric;

    if (affine_dimension(body) < d)
        throw DegenerateBody("hull_facets: vertices do not span the space");

    std::vector<Halfspace> facets;
    auto already_have = [&](const Vec& normal, double offset) {
        for (const Halfspace& h : facets) {
            if (std::fabs(h.offset - offset) > 1e-9) continue;
            if (dist(h.normal, normal) <= 1e-9) return true;
        }
        return false;
    };

    for_each_subset(n, d, [&](const std::vector<std::size_t>& idx) {
        std::vector<const Vec*> pts(d);
        for (std::size_t i = 0; i < d; ++i) pts[i] = &verts[idx[i]];
        auto normal = hyperplane_normal(pts, tol);
        if (!normal) return;
        const double offset = dot(*normal, *pts[0]);
        double lo = offset, hi = offset;
        for (const Vec& v : verts) {
            const double s = dot(*normal, v);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        if (hi <= offset + tol && !already_have(*normal, offset))
            facets.push_back({*normal, offset});
        if (lo >= offset - tol && !already_have(-*normal, -offset))
            facets.push_back({-*normal, -offset});
    });

    return HBody(d, std::move(facets));
}

bool contains_point(const HBody& body, const Vec& point, double tol) {
    if (point.dim() != body.dim()) throw DimensionMismatch("contains_point");
    if (tol < 0.0) throw DomainError("contains_point: negative tolerance");
    for (const Halfspace& h : body.halfspaces())
        if (dot(h.normal, point) > h.offset + tol) return false;
    return true;
}

VBody enumerate_vertices(const HBody& body) {
    const std::size_t d = body.dim();
    const auto& hs = body.halfspaces();
    std::vector<Vec> found;

    for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<double>> m(d, std::vector<double>(d));
        std::vector<double> b(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t c = 0; c < d; ++c) m[i][c] = hs[idx[i]].normal[c];
            b[i] = hs[idx[i]].offset;
        }
        auto x = solve_linear(std::move(m), std::move(b), 1e-10);
        if (!x) return;
        Vec p(std::vector<double>(x->begin(), x->end()));
        if (!all_finite(p) || !contains_point(body, p, 1e-7)) return;
        for (const Vec& q : found)
            if (dist(p, q) <= 1e-8) return;
        found.push_back(std::move(p));
    });

    if (found.empty()) throw DegenerateBody("enumerate_vertices: no vertex found");
    return VBody(d, std::move(found));
}

VBody extreme_points(const VBody& body) {
    const auto& verts = body.vertices();
    const std::size_t n = verts.size();
    const std::size_t d = body.dim();
    if (n == 1) return body;

    std::vector<bool> keep(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        // v_i extreme iff it is not a convex combination of the others.
        LPProblem lp(n - 1);
        for (std::size_t c = 0; c < d; ++c) {
            std::vector<double> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) row.push_back(verts[j][c]);
            lp.add_eq(std::move(row), verts[i][c]);
        }
        lp.add_eq(std::vector<double>(n - 1, 1.0), 1.0);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            std::vector<double> row(n - 1, 0.0);
            row[j] = -1.0;
            lp.add_ineq(std::move(row), 0.0);
        }
        if (solve_lp(lp).status == LPStatus::Optimal) keep[i] = false;
    }

    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(verts[i]);
    if (out.empty()) out.push_back(verts[0]); // all coincident after dedup
    return VBody(d, std::move(out));
}

bool is_bounded(const HBody& body) {
    const std::size_t d = body.dim();
    for (std::size_t c = 0; c < d; ++c) {
        for (double sign : {1.0, -1.0}) {
            LPProblem lp(d);
            lp.objective[c] = sign;
            for (const Halfspace& h : body.halfspaces())
                lp.add_ineq(h.normal.coords(), h.offset);
            if (solve_lp(lp).status == LPStatus::Unbounded) return false;
        }
    }
    return true;
}

} // namespace rdr
