#pragma once

#include <cstddef>
#include <vector>

namespace rdr {

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// maximize objective . x  subject to  ineq_lhs[i] . x <= ineq_rhs[i]
/// and eq_lhs[j] . x == eq_rhs[j]. Variables are free (unrestricted in sign).
struct LPProblem {
    std::size_t num_vars = 0;
    std::vector<std::vector<double>> ineq_lhs;
    std::vector<double> ineq_rhs;
    std::vector<std::vector<double>> eq_lhs;
    std::vector<double> eq_rhs;
    std::vector<double> objective;

    explicit LPProblem(std::size_t n) : num_vars(n), objective(n, 0.0) {}

    void add_ineq(std::vector<double> a, double b) {
        ineq_lhs.push_back(std::move(a));
        ineq_rhs.push_back(b);
    }
    void add_eq(std::vector<double> a, double b) {
        eq_lhs.push_back(std::move(a));
        eq_rhs.push_back(b);
    }
};

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<double> x;    // meaningful only when status == Optimal
    double value = 0.0;
};

/// Dense two-phase simplex. Pivot selection is Dantzig's rule with
/// largest-pivot tie-breaking for numerical health, degrading to Bland's
/// anti-cycling rule when the objective stalls. Intended for the tiny,
/// well-conditioned programs that arise here (<= ~10 variables, <= ~100
/// constraints).
LPSolution solve_lp(const LPProblem& problem);

} // namespace rdr
