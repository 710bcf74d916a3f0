#pragma once

#include <utility>
#include <vector>

#include "rdr/body.hpp"
#include "rdr/vec.hpp"

namespace rdr {

/// A simplex facet with two candidate apexes on the same open side of its
/// affine hull. Interpolating the apex sweeps a one-parameter simplex family.
struct MovingVertexConfig {
    Vec p0, p1;             // candidate apexes
    std::vector<Vec> facet; // n affinely independent points in R^n

    /// Throws DomainError / DegenerateBody when the invariants fail.
    void validate() const;

    /// Unit normal of aff(facet), oriented towards p0, and the signed
    /// heights of both apexes (positive by construction).
    Vec facet_normal() const;
    double height0() const;
    double height1() const;
};

/// Tetrahedron inscribed in a sphere of radius R with four edges of equal
/// length D (the derived diameter) and two opposing edges of lengths a, b.
struct SpecialSimplexParams {
    double a = 0.0; // short edge
    double b = 0.0; // opposite edge
    double R = 1.0; // circumradius

    double diameter() const; // D with D^2 = 2R^2 + 2 sqrt(R^2-a^2/4) sqrt(R^2-b^2/4)
    void validate() const;   // 0 < a <= b <= D, a,b <= 2R
};

/// Membership query for the spherical hull construction: convex combinations
/// of rays from anchor points through generators, intersected with the
/// sphere. All points must lie on the unit sphere.
struct CPHullQuery {
    Vec query;
    std::vector<Vec> generators;
    std::vector<Vec> anchors;
};

/// The canonical diametral chord on the unit sphere:
/// p3 = (-sqrt(D^2 - D^4/4), D^2/2 - 1, 0), p4 = (0, -1, 0).
/// Domain: D in [sqrt(8/3), sqrt(3)).
std::pair<Vec, Vec> base_pair(double D);

/// The two intersection points of the distance-D circles around p3 and p4;
/// first has third coordinate >= 0, second <= 0. They coincide iff D=sqrt(3).
/// Domain: D in [sqrt(8/3), sqrt(3)].
std::pair<Vec, Vec> star_points(double D);

/// Simplex with apex (1-alpha) p0 + alpha p1 over the config's facet.
VBody k_alpha(const MovingVertexConfig& config, double alpha);

/// Coordinates of the special simplex: (0, +-a/2, sqrt(R^2-a^2/4)) and
/// (+-b/2, 0, -sqrt(R^2-b^2/4)).
VBody special_simplex(const SpecialSimplexParams& params);

/// Short edge a of the simplex with five edges of length D inscribed in a
/// sphere of radius R:  a^2/(4R^2) = 1 - ((D^2/R^2-2)^2/4) / (1 - D^2/(4R^2)).
double short_edge_for_five_diametral(double D, double R);

/// Convenience: the five-diametral-edge ("isosceles") simplex itself.
VBody isosceles_simplex(double D, double R = 1.0);

/// Closed-form inradius of the special simplex,
/// r = (sqrt(R^2-a^2/4)+sqrt(R^2-b^2/4)) a b / (2a sqrt(D^2-a^2/4) + 2b sqrt(D^2-b^2/4)).
double closed_form_inradius(double a, double b, double R);

/// Inradius of the five-diametral-edge simplex,
/// r = D^2 sqrt(3-D^2) / (4 sqrt(3-D^2) - sqrt(3)(D^2-4)) at R=1, scaled by R.
/// Domain: D/R in [sqrt(8/3), sqrt(3)]; returns 0 at the right endpoint.
double isosceles_inradius(double D, double R);

/// Inradius of the special simplex as a function of x = b^2/4 at circumradius
/// 1 and squared diameter d:
/// f = (d/2 - x) / ( sqrt(1/x) sqrt(x(1-d)+d^2/4) + (1-x) sqrt(4(d-x)/(4(d-x)-d^2)) ).
/// Domain: d in [8/3, 3), x in [(4-d)/2, d/4].
double inradius_profile(double x, double d);

/// The two summands g, h of the numerator of f' and the quadratic q driving
/// the sign of h'. g + h vanishes at x = (4-d)/2. Domain: d in [8/3, 3),
/// x in (0, d/4] (wider than inradius_profile so the curvature probes at x = 1/2
/// are admissible).
struct ProfileSlopeTerms {
    double g = 0.0;
    double h = 0.0;
    double q = 0.0;
};
ProfileSlopeTerms inradius_profile_slope(double x, double d);

/// LP feasibility test for the spherical hull membership. Linearized with
/// beta_ij = lambda_j alpha_ij:  q = sum_j lambda_j p^j + sum_ij beta_ij
/// (q^i - p^j), lambda in the simplex, beta >= 0, sum_i beta_ij >= lambda_j.
/// A box bound sum beta <= 1e6 keeps the relaxed lambda_j = 0 rays finite.
bool cp_hull_member(const CPHullQuery& query);

/// The two unit-sphere points at distance D from both p and q (the chord
/// circles' intersection), as a test/construction helper. Throws DomainError
/// when the circles do not meet.
std::pair<Vec, Vec> sphere_distance_circle_intersection(const Vec& p, const Vec& q, double D);

} // namespace rdr
