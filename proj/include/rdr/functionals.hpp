#pragma once

#include <cstdint>
#include <vector>

#include "rdr/body.hpp"
#include "rdr/vec.hpp"

namespace rdr {

struct Ball {
    Vec center;
    double radius = 0.0;
};

/// The triple (inradius, diameter, circumradius), all in length units.
struct FunctionalTriple {
    double r = 0.0;
    double D = 0.0;
    double R = 0.0;
};

/// Certificate that a body (presented normalized, circumball = unit ball at
/// the origin) is optimally contained in that ball: the vertices on the unit
/// sphere must admit a convex combination summing to (numerically) zero.
struct ContainmentCertificate {
    std::vector<Vec> contact_points;       // on the unit sphere
    std::vector<double> convex_coefficients;
    double residual = 0.0;                 // |sum_i lambda_i p_i|

    bool valid() const;
};

struct InradiusResult {
    double radius = 0.0;
    Vec center; // translation realizing the optimum
};

struct DiameterResult {
    double value = 0.0;
    Vec first, second; // attaining pair, lexicographic tie-break
};

inline constexpr std::uint64_t kDefaultBallSeed = 0x9e3779b97f4a7c15ull;

/// Smallest enclosing ball of the vertex set (move-to-front algorithm over
/// support sets of size <= dim+1; for <= 10 points the result is verified
/// against an exhaustive pass over all support subsets). The seed controls
/// the internal processing permutation only; the result is deterministic.
Ball circumball(const VBody& body, std::uint64_t seed = kDefaultBallSeed);

/// Circumradius with its center, R(K) = R(ext(K)).
Ball circumradius(const VBody& body);

/// Max pairwise vertex distance; the diameter of a polytope is attained
/// between vertices.
DiameterResult diameter(const VBody& body);

/// Chebyshev center: maximize rho s.t. a_j.t + rho <= b_j over all facets.
InradiusResult inradius_euclidean(const HBody& body);

/// Generalized inradius r(K,C): maximize rho s.t. a_j.t + rho h_C(a_j) <= b_j.
InradiusResult inradius_gauge(const HBody& body, const Gauge& gauge);

/// See ContainmentCertificate. Throws NoContacts when no vertex lies on the
/// unit sphere within tolerance (the body was not normalized).
ContainmentCertificate optimal_containment_certificate(const VBody& body);

/// Lower bound on the diameter from the circumradius: R * sqrt(2(n+1)/n),
/// tight exactly for the regular n-simplex.
double jung_lower_bound(double R, std::size_t n = 3);

/// Functionals of the outer parallel body K + rho*B via the closed-form
/// identities (r, D, R) -> (r + rho, D + 2 rho, R + rho).
FunctionalTriple rounded_functionals(const VBody& body, double rho);

/// (r, D, R) of a vertex body. Flat bodies are legal: their inradius is 0
/// (no 3-ball of positive radius fits) and the Chebyshev LP is bypassed.
FunctionalTriple functional_triple(const VBody& body);

} // namespace rdr
