#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rdr/body.hpp"
#include "rdr/errors.hpp"
#include "rdr/rng.hpp"

using rdr::Gauge;
using rdr::Halfspace;
using rdr::HBody;
using rdr::VBody;
using rdr::Vec;

namespace {

VBody unit_cube() {
    std::vector<Vec> v;
    for (int i = 0; i < 8; ++i)
        v.push_back(Vec{i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    return VBody(3, std::move(v));
}

const double kInvSqrt3 = 0.57735026918962576;

VBody regular_tetrahedron() {
    const double s = kInvSqrt3;
    return VBody(3, {Vec{s, s, s}, Vec{s, -s, -s}, Vec{-s, s, -s}, Vec{-s, -s, s}});
}

bool same_point_set(const std::vector<Vec>& a, const std::vector<Vec>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (const Vec& p : a) {
        bool found = false;
        for (const Vec& q : b)
            if (rdr::dist(p, q) <= tol) found = true;
        if (!found) return false;
    }
    return true;
}

} // namespace

TEST_CASE("vertex deduplication") {
    VBody b(2, {Vec{0.0, 0.0}, Vec{0.0, 0.0}, Vec{1.0, 0.0}});
    CHECK(b.vertices().size() == 2);
}

TEST_CASE("support function on the cube") {
    const VBody cube = unit_cube();
    const auto s = rdr::support_value(cube, Vec{1.0, 0.0, 0.0});
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.argmax[0] == doctest::Approx(1.0));

    const auto zero = rdr::support_value(cube, Vec{0.0, 0.0, 0.0});
    CHECK(zero.value == 0.0);
    CHECK(rdr::dist(zero.argmax, cube.vertices()[0]) == 0.0); // lowest-index tie-break
}

TEST_CASE("support function on the regular tetrahedron") {
    const auto s = rdr::support_value(regular_tetrahedron(), Vec{0.0, 0.0, 1.0});
    CHECK(s.value == doctest::Approx(kInvSqrt3).epsilon(1e-14));
}

TEST_CASE("support dimension mismatch") {
    CHECK_THROWS_AS(rdr::support_value(unit_cube(), Vec{1.0, 0.0}), rdr::DimensionMismatch);
}

TEST_CASE("width is non-negative in random directions") {
    rdr::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> pts;
        const std::size_t nv = 2 + rng.below(9);
        for (std::size_t i = 0; i < nv; ++i) pts.push_back(rng.unit_ball(3));
        const VBody body(3, std::move(pts));
        for (int k = 0; k < 10; ++k) {
            const Vec a = rng.unit_sphere(3) * rng.uniform(0.1, 5.0);
            const double width =
                rdr::support_value(body, a).value + rdr::support_value(body, -a).value;
            CHECK(width >= -1e-12);
        }
    }
}

TEST_CASE("cube facets") {
    const HBody h = rdr::hull_facets(unit_cube());
    REQUIRE(h.halfspaces().size() == 6);
    for (int c = 0; c < 3; ++c) {
        for (double sign : {1.0, -1.0}) {
            bool found = false;
            for (const Halfspace& f : h.halfspaces()) {
                Vec expect{0.0, 0.0, 0.0};
                expect[c] = sign;
                if (rdr::dist(f.normal, expect) < 1e-12 && std::fabs(f.offset - 1.0) < 1e-12)
                    found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("tetrahedron facets match the opposite-vertex structure") {
    const VBody tetra = regular_tetrahedron();
    const HBody h = rdr::hull_facets(tetra);
    REQUIRE(h.halfspaces().size() == 4);
    // each facet normal is the negated opposite vertex (unit), offset 1/3
    for (const Vec& v : tetra.vertices()) {
        bool found = false;
        for (const Halfspace& f : h.halfspaces())
            if (rdr::dist(f.normal, -v) < 1e-9 && std::fabs(f.offset - 1.0 / 3.0) < 1e-9)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("coplanar points are degenerate for facet enumeration") {
    VBody flat(3, {Vec{0.0, 0.0, 0.0}, Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0},
                   Vec{1.0, 1.0, 0.0}});
    CHECK(rdr::affine_dimension(flat) == 2);
    CHECK_THROWS_AS(rdr::hull_facets(flat), rdr::DegenerateBody);
}

TEST_CASE("contains_point tolerances") {
    const HBody cube = rdr::hull_facets(unit_cube());
    CHECK(rdr::contains_point(cube, Vec{0.0, 0.0, 0.0}, 0.0));
    CHECK_FALSE(rdr::contains_point(cube, Vec{1.0 + 1e-6, 0.0, 0.0}, 1e-9));
    CHECK(rdr::contains_point(cube, Vec{1.0 + 1e-6, 0.0, 0.0}, 1e-3));
}

TEST_CASE("facets accept the generating vertices and their mixtures") {
    rdr::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Vec> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(rng.unit_ball(3));
        const VBody body(3, pts);
        if (rdr::affine_dimension(body) < 3) continue;
        const HBody h = rdr::hull_facets(body);
        for (const Vec& v : body.vertices()) CHECK(rdr::contains_point(h, v, 1e-9));
        for (int k = 0; k < 20; ++k) {
            std::vector<double> w(body.vertices().size());
            double total = 0.0;
            for (double& wi : w) total += (wi = rng.uniform01());
            Vec p(3);
            for (std::size_t i = 0; i < w.size(); ++i)
                p += (w[i] / total) * body.vertices()[i];
            CHECK(rdr::contains_point(h, p, 1e-9));
        }
    }
}

TEST_CASE("vertex enumeration round-trips cubes, simplices, random hulls") {
    const VBody cube = unit_cube();
    CHECK(same_point_set(rdr::enumerate_vertices(rdr::hull_facets(cube)).vertices(),
                         cube.vertices(), 1e-8));

    const VBody tetra = regular_tetrahedron();
    CHECK(same_point_set(rdr::enumerate_vertices(rdr::hull_facets(tetra)).vertices(),
                         tetra.vertices(), 1e-8));

    rdr::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(rng.unit_ball(3));
        const VBody body(3, pts);
        if (rdr::affine_dimension(body) < 3) continue;
        const VBody expect = rdr::extreme_points(body);
        const VBody got = rdr::enumerate_vertices(rdr::hull_facets(body));
        CHECK(same_point_set(got.vertices(), expect.vertices(), 1e-8));
    }
}

TEST_CASE("extreme_points drops interior points") {
    std::vector<Vec> pts = unit_cube().vertices();
    pts.push_back(Vec{0.0, 0.0, 0.0});
    pts.push_back(Vec{0.5, 0.25, -0.25});
    const VBody reduced = rdr::extreme_points(VBody(3, std::move(pts)));
    CHECK(same_point_set(reduced.vertices(), unit_cube().vertices(), 1e-12));
}

TEST_CASE("boundedness probe") {
    CHECK(rdr::is_bounded(rdr::hull_facets(unit_cube())));
    // single half-space: wildly unbounded
    HBody half(3, {Halfspace{Vec{0.0, 0.0, 1.0}, 1.0}});
    CHECK_FALSE(rdr::is_bounded(half));
}

TEST_CASE("gauge support") {
    const Gauge ball = Gauge::ball(3);
    CHECK(ball.support(Vec{0.0, 3.0, 4.0}) == doctest::Approx(5.0));

    const Gauge oct = Gauge::polytope(VBody(
        3, {Vec{1.0, 0.0, 0.0}, Vec{-1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0},
            Vec{0.0, -1.0, 0.0}, Vec{0.0, 0.0, 1.0}, Vec{0.0, 0.0, -1.0}}));
    CHECK(oct.support(Vec{1.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(oct.support(Vec{1.0, 1.0, 1.0}) == doctest::Approx(1.0));

    // flat gauges are rejected
    CHECK_THROWS_AS(Gauge::polytope(VBody(3, {Vec{0.0, 0.0, 0.0}, Vec{1.0, 0.0, 0.0},
                                              Vec{0.0, 1.0, 0.0}})),
                    rdr::DegenerateBody);
}

TEST_CASE("halfspace normals are renormalized on construction") {
    HBody h(2, {Halfspace{Vec{3.0, 4.0}, 10.0}});
    CHECK(rdr::norm(h.halfspaces()[0].normal) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.halfspaces()[0].offset == doctest::Approx(2.0));
}
