#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <vector>

#include "rdr/lp.hpp"
#include "rdr/rng.hpp"

using rdr::LPProblem;
using rdr::LPSolution;
using rdr::LPStatus;
using rdr::solve_lp;

namespace {

// Independent oracle: enumerate all 3-subsets of constraints, solve the
// 3x3 system by Cramer's rule, keep feasible intersection points, maximize.
struct BruteForceResult {
    bool feasible = false;
    double value = 0.0;
};

std::optional<std::vector<double>> cramer3(const double a[3][3], const double b[3]) {
    auto det3 = [](const double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double d = det3(a);
    if (std::fabs(d) < 1e-9) return std::nullopt;
    std::vector<double> x(3);
    for (int col = 0; col < 3; ++col) {
        double m[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = (j == col) ? b[i] : a[i][j];
        x[col] = det3(m) / d;
    }
    return x;
}

BruteForceResult brute_force_lp3(const LPProblem& p) {
    const std::size_t m = p.ineq_lhs.size();
    BruteForceResult best;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                const double a[3][3] = {
                    {p.ineq_lhs[i][0], p.ineq_lhs[i][1], p.ineq_lhs[i][2]},
                    {p.ineq_lhs[j][0], p.ineq_lhs[j][1], p.ineq_lhs[j][2]},
                    {p.ineq_lhs[k][0], p.ineq_lhs[k][1], p.ineq_lhs[k][2]}};
                const double b[3] = {p.ineq_rhs[i], p.ineq_rhs[j], p.ineq_rhs[k]};
                auto x = cramer3(a, b);
                if (!x) continue;
                bool ok = true;
                for (std::size_t r = 0; r < m && ok; ++r) {
                    double lhs = 0.0;
                    for (int c = 0; c < 3; ++c) lhs += p.ineq_lhs[r][c] * (*x)[c];
                    ok = lhs <= p.ineq_rhs[r] + 1e-7;
                }
                if (!ok) continue;
                double val = 0.0;
                for (int c = 0; c < 3; ++c) val += p.objective[c] * (*x)[c];
                if (!best.feasible || val > best.value) best = {true, val};
            }
    return best;
}

LPProblem random_box_program(rdr::Rng& rng) {
    LPProblem p(3);
    for (int c = 0; c < 3; ++c) p.objective[c] = rng.uniform(-1.0, 1.0);
    // box keeps the program bounded; random cuts may make it infeasible
    for (int c = 0; c < 3; ++c) {
        std::vector<double> row(3, 0.0);
        row[c] = 1.0;
        p.add_ineq(row, rng.uniform(0.5, 3.0));
        row[c] = -1.0;
        p.add_ineq(row, rng.uniform(0.5, 3.0));
    }
    const std::size_t cuts = rng.below(5);
    for (std::size_t i = 0; i < cuts; ++i) {
        std::vector<double> row(3);
        for (int c = 0; c < 3; ++c) row[c] = rng.uniform(-1.0, 1.0);
        // low offsets produce a healthy share of infeasible programs
        p.add_ineq(row, rng.uniform(-2.0, 1.0));
    }
    return p;
}

} // namespace

TEST_CASE("one-variable maximum") {
    LPProblem p(1);
    p.objective = {1.0};
    p.add_ineq({1.0}, 3.0);
    p.add_ineq({-1.0}, 0.0);
    const LPSolution s = solve_lp(p);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(s.x[0] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("infeasible pair of bounds") {
    LPProblem p(1);
    p.objective = {1.0};
    p.add_ineq({-1.0}, -2.0); // x >= 2
    p.add_ineq({1.0}, 1.0);   // x <= 1
    CHECK(solve_lp(p).status == LPStatus::Infeasible);
}

TEST_CASE("unbounded direction") {
    LPProblem p(2);
    p.objective = {1.0, 0.0};
    p.add_ineq({0.0, 1.0}, 1.0);
    CHECK(solve_lp(p).status == LPStatus::Unbounded);
}

TEST_CASE("free variables may go negative") {
    LPProblem p(1);
    p.objective = {-1.0}; // minimize x
    p.add_ineq({-1.0}, 5.0); // x >= -5
    const LPSolution s = solve_lp(p);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.x[0] == doctest::Approx(-5.0).epsilon(1e-12));
}

TEST_CASE("equality constraints") {
    LPProblem p(2);
    p.objective = {0.0, 1.0};
    p.add_eq({1.0, 1.0}, 1.0);
    p.add_ineq({-1.0, 0.0}, 0.0); // x1 >= 0
    const LPSolution s = solve_lp(p);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chebyshev program of the unit cube") {
    // variables (t1,t2,t3,rho); facets +-e_i . t + rho <= 1
    LPProblem p(4);
    p.objective = {0.0, 0.0, 0.0, 1.0};
    for (int c = 0; c < 3; ++c) {
        for (double sign : {1.0, -1.0}) {
            std::vector<double> row(4, 0.0);
            row[c] = sign;
            row[3] = 1.0;
            p.add_ineq(row, 1.0);
        }
    }
    const LPSolution s = solve_lp(p);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-12));
    for (int c = 0; c < 3; ++c) CHECK(std::fabs(s.x[c]) < 1e-9);
}

TEST_CASE("optimal solutions satisfy every constraint") {
    rdr::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const LPProblem p = random_box_program(rng);
        const LPSolution s = solve_lp(p);
        if (s.status != LPStatus::Optimal) continue;
        for (std::size_t r = 0; r < p.ineq_lhs.size(); ++r) {
            double lhs = 0.0;
            for (int c = 0; c < 3; ++c) lhs += p.ineq_lhs[r][c] * s.x[c];
            CHECK(lhs <= p.ineq_rhs[r] + 1e-9);
        }
    }
}

TEST_CASE("agrees with brute-force vertex enumeration on random programs") {
    rdr::Rng rng(7);
    int optimal_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const LPProblem p = random_box_program(rng);
        const LPSolution s = solve_lp(p);
        const BruteForceResult bf = brute_force_lp3(p);
        if (bf.feasible) {
            ++optimal_seen;
            REQUIRE(s.status == LPStatus::Optimal);
            CHECK(s.value == doctest::Approx(bf.value).epsilon(1e-8));
        } else {
            ++infeasible_seen;
            CHECK(s.status == LPStatus::Infeasible);
        }
    }
    // the generator must actually exercise both outcomes
    CHECK(optimal_seen > 100);
    CHECK(infeasible_seen > 5);
}
