#include "rdr/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>

#include "rdr/errors.hpp"
#include "rdr/rng.hpp"
#include "rdr/simplex_family.hpp"
#include "rdr/tolerances.hpp"

namespace rdr {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt23 = std::sqrt(2.0 / 3.0);
const double kSqrt83 = std::sqrt(8.0 / 3.0);

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

const char* inequality_name(Inequality id) {
    switch (id) {
    case Inequality::DiameterBound: return "D<=2R";
    case Inequality::Jung: return "Jung";
    case Inequality::Concentricity: return "concentricity";
    case Inequality::NonnegInradius: return "r>=0";
    case Inequality::InradiusLower: return "new";
    }
    return "?";
}

bool FeasibilityVerdict::is_tight(Inequality id) const {
    return std::find(equalities.begin(), equalities.end(), id) != equalities.end();
}

double new_inequality_rhs(double D, double R) {
    if (!(D > 0.0) || !(R > 0.0) || D > kSqrt3 * R + 1e-12)
        throw DomainError("new_inequality_rhs: need 0 < D <= sqrt(3) R");
    const double s = std::sqrt(std::max(0.0, 3.0 * R * R - D * D));
    return D * D * s / (4.0 * R * s + kSqrt3 * (4.0 * R * R - D * D));
}

FeasibilityVerdict check_complete_system(const FunctionalTriple& t) {
    if (!std::isfinite(t.r) || !std::isfinite(t.D) || !std::isfinite(t.R))
        throw DomainError("check_complete_system: non-finite entry");

    FeasibilityVerdict v;
    const double tight = tolerances().tight;
    auto record = [&](Inequality id, double slack) {
        v.evaluated.emplace_back(id, slack);
        if (slack < -tight) {
            v.violations.emplace_back(id, slack);
            v.feasible = false;
        } else if (std::fabs(slack) <= tight) {
            v.equalities.push_back(id);
        }
    };

    record(Inequality::DiameterBound, 2.0 * t.R - t.D);
    record(Inequality::Jung, kSqrt3 * t.D - std::sqrt(8.0) * t.R);
    record(Inequality::Concentricity, t.D - t.r - t.R);
    record(Inequality::NonnegInradius, t.r);
    // The lower bound applies only up to D = sqrt(3) R and is continuous
    // with value 0 there; beyond that it is absent, not infinitely slack.
    // Near the boundary the bound behaves like sqrt(3R^2 - D^2), so one ulp
    // of representation error in D already produces rhs ~ 1e-8; a collapse
    // window of a few ulps on D^2 keeps exact boundary triples (e.g. the
    // equilateral triangle) on the curve instead of 1e-8 outside it.
    if (t.D > 0.0 && t.R > 0.0 && t.D <= kSqrt3 * t.R + tight) {
        const double s2 = 3.0 * t.R * t.R - t.D * t.D;
        const double collapse = 96.0 * std::numeric_limits<double>::epsilon() * t.R * t.R;
        const double rhs = s2 > collapse ? new_inequality_rhs(t.D, t.R) : 0.0;
        record(Inequality::InradiusLower, t.r - rhs);
    }
    return v;
}

DiagramPoint diagram_map(const FunctionalTriple& t) {
    if (!(t.R > 0.0)) throw DomainError("diagram_map: R must be positive");
    return {t.r / t.R, t.D / (2.0 * t.R)};
}

std::vector<BoundarySample> boundary_polyline(int samples_per_arc) {
    if (samples_per_arc < 2) throw DomainError("boundary_polyline: need >= 2 samples per arc");
    const int n = samples_per_arc;

    // Landmark corners, pinned analytically so consecutive arcs share their
    // endpoints bit-for-bit (the new-inequality curve has a vertical tangent
    // at (0, sqrt(3)/2), where direct evaluation would be ill-conditioned).
    const DiagramPoint top_left{0.0, 1.0};
    const DiagramPoint left_bottom{0.0, kSqrt3 / 2.0};
    const DiagramPoint tetra{1.0 / 3.0, kSqrt23};
    const DiagramPoint jung_right{kSqrt83 - 1.0, kSqrt23};
    const DiagramPoint ball{1.0, 1.0};

    std::vector<BoundarySample> out;
    out.reserve(static_cast<std::size_t>(n) * 5);
    auto emit = [&](const char* arc, const DiagramPoint& a, const DiagramPoint& b, int i,
                    auto&& point_at) {
        if (i == 0) { out.push_back({a, arc}); return; }
        if (i == n - 1) { out.push_back({b, arc}); return; }
        out.push_back({point_at(static_cast<double>(i) / (n - 1)), arc});
    };

    for (int i = 0; i < n; ++i)
        emit("left-edge", top_left, left_bottom, i, [&](double s) {
            return DiagramPoint{0.0, 1.0 + s * (kSqrt3 / 2.0 - 1.0)};
        });
    for (int i = 0; i < n; ++i)
        emit("new-inequality", left_bottom, tetra, i, [&](double s) {
            const double y = kSqrt3 / 2.0 + s * (kSqrt23 - kSqrt3 / 2.0);
            return DiagramPoint{new_inequality_rhs(2.0 * y, 1.0), y};
        });
    for (int i = 0; i < n; ++i)
        emit("jung", tetra, jung_right, i, [&](double s) {
            return DiagramPoint{1.0 / 3.0 + s * (kSqrt83 - 1.0 - 1.0 / 3.0), kSqrt23};
        });
    for (int i = 0; i < n; ++i)
        emit("concentricity", jung_right, ball, i, [&](double s) {
            const double x = (kSqrt83 - 1.0) + s * (1.0 - (kSqrt83 - 1.0));
            return DiagramPoint{x, (1.0 + x) / 2.0};
        });
    for (int i = 0; i < n; ++i)
        emit("top", ball, top_left, i, [&](double s) {
            return DiagramPoint{1.0 - s, 1.0};
        });
    return out;
}

std::pair<FunctionalTriple, DiagramPoint> starshape_combine(const VBody& body, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw DomainError("starshape_combine: lambda outside [0,1]");
    const ContainmentCertificate cert = optimal_containment_certificate(body);
    if (!cert.valid())
        throw NotOptimallyContained("starshape_combine: certificate residual too large");
    const FunctionalTriple base = functional_triple(body);
    if (std::fabs(base.R - 1.0) > 1e-8)
        throw NotOptimallyContained("starshape_combine: circumradius differs from 1");

    FunctionalTriple combined;
    if (lambda < 1.0 && affine_dimension(body) == body.dim()) {
        // Scale the body and round it; identical to the closed-form branch
        // by homogeneity, but exercises the full pipeline.
        std::vector<Vec> scaled;
        for (const Vec& v : body.vertices()) scaled.push_back(v * (1.0 - lambda));
        combined = rounded_functionals(VBody(body.dim(), std::move(scaled)), lambda);
    } else {
        combined = {(1.0 - lambda) * base.r + lambda,
                    (1.0 - lambda) * base.D + 2.0 * lambda,
                    (1.0 - lambda) * base.R + lambda};
    }
    return {combined, diagram_map(combined)};
}

const std::vector<std::string>& sample_families() {
    static const std::vector<std::string> names{
        "random-hull", "isosceles", "rounded-tetra", "planar-triangle", "segment-combos"};
    return names;
}

namespace {

VBody regular_tetrahedron() {
    const double s = 1.0 / std::sqrt(3.0);
    return VBody(3, {Vec{s, s, s}, Vec{s, -s, -s}, Vec{-s, s, -s}, Vec{-s, -s, s}});
}

SampleRow make_row(const FunctionalTriple& t, const std::string& family, int id) {
    const DiagramPoint p = diagram_map(t);
    return {p.x, p.y, t.r, t.D, t.R, family, id};
}

SampleRow sample_one(const std::string& family, Rng& rng, int id) {
    if (family == "random-hull") {
        const std::size_t nv = 4 + rng.below(9);
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < nv; ++i) pts.push_back(rng.unit_ball(3));
        return make_row(functional_triple(VBody(3, std::move(pts))), family, id);
    }
    if (family == "isosceles") {
        const double D = rng.uniform(kSqrt83, kSqrt3 - 1e-6);
        return make_row(functional_triple(isosceles_simplex(D)), family, id);
    }
    if (family == "rounded-tetra") {
        const double lambda = rng.uniform01();
        return make_row(starshape_combine(regular_tetrahedron(), lambda).first, family, id);
    }
    if (family == "planar-triangle") {
        // Isosceles triangle inscribed in the unit circle with base chord D:
        // circumradius 1, inradius 0 (flat in 3-space).
        const double D = rng.uniform(kSqrt3, 2.0);
        const double y0 = -std::sqrt(std::max(0.0, 1.0 - D * D / 4.0));
        VBody tri(3, {Vec{0.0, 1.0, 0.0}, Vec{-D / 2.0, y0, 0.0}, Vec{D / 2.0, y0, 0.0}});
        return make_row(functional_triple(tri), family, id);
    }
    if (family == "segment-combos") {
        const double lambda = rng.uniform01();
        VBody segment(3, {Vec{1.0, 0.0, 0.0}, Vec{-1.0, 0.0, 0.0}});
        return make_row(starshape_combine(segment, lambda).first, family, id);
    }
    throw UnknownName("sample_diagram: unknown family '" + family + "'");
}

} // namespace

std::vector<SampleRow> sample_diagram(const std::vector<std::string>& families,
                                      int count, std::uint64_t seed) {
    if (count < 0) throw DomainError("sample_diagram: negative count");
    for (const std::string& f : families) {
        const auto& known = sample_families();
        if (std::find(known.begin(), known.end(), f) == known.end())
            throw UnknownName("sample_diagram: unknown family '" + f + "'");
    }
    std::vector<SampleRow> rows;
    int id = 0;
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
        for (int i = 0; i < count; ++i, ++id) {
            // Per-row seed: rows are independent and could be produced in
            // any order or in parallel without changing the output.
            Rng rng(derive_seed(seed, (static_cast<std::uint64_t>(fi) << 32) | i));
            rows.push_back(sample_one(families[fi], rng, id));
        }
    }
    return rows;
}

void write_sample_csv(const std::vector<SampleRow>& rows, std::ostream& out) {
    out << "x,y,r,D,R,family,id\n";
    for (const SampleRow& r : rows)
        out << fmt17(r.x) << ',' << fmt17(r.y) << ',' << fmt17(r.r) << ',' << fmt17(r.D)
            << ',' << fmt17(r.R) << ',' << r.family << ',' << r.id << '\n';
}

void write_boundary_csv(const std::vector<BoundarySample>& boundary, std::ostream& out) {
    out << "x,y,arc\n";
    for (const BoundarySample& b : boundary)
        out << fmt17(b.point.x) << ',' << fmt17(b.point.y) << ',' << b.arc << '\n';
}

namespace {

constexpr double kPxX0 = 60.0, kPxX1 = 960.0;
constexpr double kPxY0 = 940.0, kPxY1 = 60.0;

double px(double x) { return kPxX0 + x * (kPxX1 - kPxX0); }

double py(double y) {
    const double lo = kSqrt23 - 0.05, hi = 1.02;
    return kPxY0 + (y - lo) / (hi - lo) * (kPxY1 - kPxY0);
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

const char* family_color(const std::string& family) {
    if (family == "random-hull") return "#4878cf";
    if (family == "isosceles") return "#d65f5f";
    if (family == "rounded-tetra") return "#6acc65";
    if (family == "planar-triangle") return "#b47cc7";
    if (family == "segment-combos") return "#c4ad66";
    return "#777777";
}

} // namespace

void render_svg(const std::vector<SampleRow>& rows,
                const std::vector<BoundarySample>& boundary, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    // Boundary arcs, one polyline each, in traversal order.
    std::vector<std::string> arc_order;
    std::map<std::string, std::string> arc_points;
    for (const BoundarySample& b : boundary) {
        if (arc_points.find(b.arc) == arc_points.end()) arc_order.push_back(b.arc);
        std::string& pts = arc_points[b.arc];
        if (!pts.empty()) pts += ' ';
        pts += fmt2(px(b.point.x)) + "," + fmt2(py(b.point.y));
    }
    for (const std::string& arc : arc_order)
        out << "<polyline fill=\"none\" stroke=\"#333333\" stroke-width=\"2\" points=\""
            << arc_points[arc] << "\"/>\n";

    for (const SampleRow& r : rows)
        out << "<circle cx=\"" << fmt2(px(r.x)) << "\" cy=\"" << fmt2(py(r.y))
            << "\" r=\"3\" fill=\"" << family_color(r.family) << "\" fill-opacity=\"0.7\"/>\n";

    // Landmark axis labels as in the diagram's figure.
    struct Label { double x, y; const char* text; bool xaxis; };
    const Label labels[] = {
        {0.0, 0.0, "0", true},
        {1.0 / 3.0, 0.0, "1/3", true},
        {kSqrt83 - 1.0, 0.0, "sqrt(8/3)-1", true},
        {1.0, 0.0, "1", true},
        {0.0, kSqrt23, "2/sqrt(6)", false},
        {0.0, kSqrt3 / 2.0, "sqrt(3)/2", false},
        {0.0, 1.0, "1", false},
    };
    for (const Label& l : labels) {
        if (l.xaxis)
            out << "<text x=\"" << fmt2(px(l.x)) << "\" y=\"975\" font-size=\"20\" "
                << "text-anchor=\"middle\">" << l.text << "</text>\n";
        else
            out << "<text x=\"55\" y=\"" << fmt2(py(l.y) + 6.0) << "\" font-size=\"20\" "
                << "text-anchor=\"end\">" << l.text << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace rdr
