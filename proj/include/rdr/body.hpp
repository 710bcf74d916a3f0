#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rdr/vec.hpp"

namespace rdr {

/// Closed half-space  normal . x <= offset  with unit normal.
struct Halfspace {
    Vec normal;
    double offset = 0.0;
};

/// Convex polytope in vertex representation. Construction deduplicates the
/// vertex list; it does not discard non-extreme points (see extreme_points).
class VBody {
public:
    VBody(std::size_t dim, std::vector<Vec> vertices);

    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }

private:
    std::size_t dim_ = 0;
    std::vector<Vec> vertices_;
};

/// Convex polytope as an intersection of half-spaces. Normals are rescaled
/// to unit length on construction.
class HBody {
public:
    HBody(std::size_t dim, std::vector<Halfspace> halfspaces);

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

private:
    std::size_t dim_ = 0;
    std::vector<Halfspace> halfspaces_;
};

/// The body measuring the generalized inradius: the Euclidean unit ball or a
/// full-dimensional polytope, exposed through its support function.
class Gauge {
public:
    static Gauge ball(std::size_t dim);
    static Gauge polytope(VBody body);

    bool is_ball() const { return !poly_.has_value(); }
    std::size_t dim() const { return dim_; }
    const VBody& poly() const { return *poly_; }

    /// h_C(a) = max_{x in C} a.x (for the ball: |a|).
    double support(const Vec& direction) const;

private:
    Gauge() = default;
    std::size_t dim_ = 0;
    std::optional<VBody> poly_;
};

struct SupportResult {
    double value = 0.0;
    Vec argmax; // lowest-index maximizing vertex
};

/// Support function of a V-polytope, h(a) = max_v a.v.
SupportResult support_value(const VBody& body, const Vec& direction);

/// Dimension of the affine hull of the vertices (0 for a point).
std::size_t affine_dimension(const VBody& body);

/// Facet-defining half-spaces of conv(vertices), by brute-force enumeration
/// of all dim-subsets of vertices: O(n^dim * n), fine for the <= ~32-vertex
/// bodies handled here. Throws DegenerateBody when the vertices do not span.
HBody hull_facets(const VBody& body);

/// True iff normal.x <= offset + tol for every half-space.
bool contains_point(const HBody& body, const Vec& point, double tol);

/// Vertices of a bounded H-polytope, by enumerating all dim-subsets of
/// half-space boundaries and keeping the feasible intersection points.
VBody enumerate_vertices(const HBody& body);

/// Removes every vertex that is a convex combination of the others.
VBody extreme_points(const VBody& body);

/// LP boundedness probe along all +-coordinate directions.
bool is_bounded(const HBody& body);

} // namespace rdr
