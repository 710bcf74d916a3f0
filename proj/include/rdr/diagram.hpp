#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rdr/body.hpp"
#include "rdr/functionals.hpp"

namespace rdr {

/// Normalized coordinates (r/R, D/(2R)) in the unit square.
struct DiagramPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class Inequality {
    DiameterBound,  // 2R >= D
    Jung,           // sqrt(3) D >= sqrt(8) R
    Concentricity,  // D >= r + R
    NonnegInradius, // r >= 0
    InradiusLower,  // r >= new_inequality_rhs(D, R), active only for D <= sqrt(3) R
};

const char* inequality_name(Inequality id);

/// Feasibility verdict for a (r, D, R) triple against the complete system.
/// `evaluated` lists every inequality that applies with its signed slack
/// (negative = violated); `violations` and `equalities` are the subsets
/// beyond / within the tightness tolerance.
struct FeasibilityVerdict {
    bool feasible = true;
    std::vector<std::pair<Inequality, double>> evaluated;
    std::vector<std::pair<Inequality, double>> violations;
    std::vector<Inequality> equalities;

    bool is_tight(Inequality id) const;
};

/// Sharp lower bound on the inradius given diameter and circumradius,
/// D^2 sqrt(3R^2-D^2) / (4R sqrt(3R^2-D^2) + sqrt(3)(4R^2-D^2)).
/// Domain: 0 < D <= sqrt(3) R; the bound is vacuous for larger D.
double new_inequality_rhs(double D, double R);

FeasibilityVerdict check_complete_system(const FunctionalTriple& triple);

/// (r/R, D/(2R)); requires R > 0.
DiagramPoint diagram_map(const FunctionalTriple& triple);

struct BoundarySample {
    DiagramPoint point;
    std::string arc; // left-edge | new-inequality | jung | concentricity | top
};

/// Closed boundary of the feasible region in diagram coordinates, traversed
/// as five arcs with shared endpoints:
///   left-edge       (0,1) -> (0, sqrt(3)/2)
///   new-inequality  (0, sqrt(3)/2) -> (1/3, sqrt(2/3))
///   jung            (1/3, sqrt(2/3)) -> (sqrt(8/3)-1, sqrt(2/3))
///   concentricity   (sqrt(8/3)-1, sqrt(2/3)) -> (1,1)
///   top             (1,1) -> (0,1)
std::vector<BoundarySample> boundary_polyline(int samples_per_arc);

/// Functionals and diagram point of (1-lambda) K + lambda B for a body
/// optimally contained in the unit ball. Throws NotOptimallyContained when
/// the containment certificate fails or R(K) differs from 1.
std::pair<FunctionalTriple, DiagramPoint> starshape_combine(const VBody& body, double lambda);

struct SampleRow {
    double x = 0.0, y = 0.0;
    double r = 0.0, D = 0.0, R = 0.0;
    std::string family;
    int id = 0;
};

/// Known sampler families.
const std::vector<std::string>& sample_families();

/// Deterministic diagram sampler. Every row's triple is produced by the
/// functionals pipeline on an actual body, so each point is realizable.
std::vector<SampleRow> sample_diagram(const std::vector<std::string>& families,
                                      int count, std::uint64_t seed);

/// CSV with header x,y,r,D,R,family,id; 17 significant digits, LF endings.
void write_sample_csv(const std::vector<SampleRow>& rows, std::ostream& out);

/// CSV with header x,y,arc.
void write_boundary_csv(const std::vector<BoundarySample>& boundary, std::ostream& out);

/// Standalone SVG of the diagram: viewBox 0 0 1000 1000, x in [0,1] mapped
/// to [60,960], y in [sqrt(2/3)-0.05, 1.02] mapped to [940,60], boundary
/// arcs as stroke-width-2 polylines, samples as radius-3 circles colored by
/// family, landmark axis labels.
void render_svg(const std::vector<SampleRow>& rows,
                const std::vector<BoundarySample>& boundary, std::ostream& out);

} // namespace rdr
