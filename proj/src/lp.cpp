#include "rdr/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rdr/errors.hpp"
#include "rdr/tolerances.hpp"

namespace rdr {

Tolerances& tolerances() {
    static Tolerances record;
    return record;
}

namespace {

constexpr double kReducedCostTol = 1e-10;
constexpr std::size_t kNoCol = static_cast<std::size_t>(-1);

// Dense tableau. Columns: structural variables in split form (x = u - v),
// then one slack per inequality row, then one artificial per row that needs
// it. Last column is the right-hand side. Free variables are handled by the
// u/v split, so every tableau variable is nonnegative.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0; // variable columns (rhs excluded)
    std::vector<std::vector<double>> a;
    std::vector<std::size_t> basis;

    double& rhs(std::size_t i) { return a[i][cols]; }
    double rhs(std::size_t i) const { return a[i][cols]; }
};

void pivot(Tableau& t, std::vector<double>& obj, std::size_t r, std::size_t c) {
    const double piv = t.a[r][c];
    if (std::fabs(piv) < tolerances().lp_pivot)
        throw NumericalFailure("simplex pivot magnitude below floor");
    const double inv = 1.0 / piv;
    for (double& x : t.a[r]) x *= inv;
    t.a[r][c] = 1.0; // kill roundoff on the pivot element
    for (std::size_t i = 0; i < t.rows; ++i) {
        if (i == r) continue;
        const double f = t.a[i][c];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j <= t.cols; ++j) t.a[i][j] -= f * t.a[r][j];
        t.a[i][c] = 0.0;
    }
    const double f = obj[c];
    if (f != 0.0) {
        for (std::size_t j = 0; j <= t.cols; ++j) obj[j] -= f * t.a[r][j];
        obj[c] = 0.0;
    }
    t.basis[r] = c;
}

// Runs the simplex loop on a tableau whose objective row "obj" holds reduced
// costs for a maximization (entry < 0 means the column improves).
//
// Column choice is Dantzig's most-negative rule and the ratio test prefers
// the largest pivot magnitude among the (near-)minimal ratios; repeatedly
// pivoting on near-zero elements through degenerate chains otherwise blows
// the tableau up. When the objective stalls long enough to suggest cycling,
// the loop degrades to strict Bland's rule, which terminates finitely.
// Returns false when the problem is unbounded.
bool run_simplex(Tableau& t, std::vector<double>& obj, const std::vector<bool>& usable) {
    const std::size_t stall_limit = 20 * (t.rows + t.cols) + 200;
    const std::size_t iter_limit = 200 * (t.rows + t.cols) + 2000;
    std::size_t stalled = 0;
    double last_value = obj[t.cols];

    for (std::size_t iter = 0; iter < iter_limit; ++iter) {
        const bool bland = stalled > stall_limit;

        std::size_t enter = kNoCol;
        for (std::size_t j = 0; j < t.cols; ++j) {
            if (!usable[j] || obj[j] >= -kReducedCostTol) continue;
            if (bland) { enter = j; break; }
            if (enter == kNoCol || obj[j] < obj[enter]) enter = j;
        }
        if (enter == kNoCol) return true;

        double min_ratio = std::numeric_limits<double>::infinity();
        bool subpivot_candidate = false;
        for (std::size_t i = 0; i < t.rows; ++i) {
            const double aij = t.a[i][enter];
            if (aij <= 0.0) continue;
            if (aij < tolerances().lp_pivot) { subpivot_candidate = true; continue; }
            min_ratio = std::min(min_ratio, t.rhs(i) / aij);
        }
        if (min_ratio == std::numeric_limits<double>::infinity()) {
            if (subpivot_candidate)
                throw NumericalFailure("only vanishing pivots available");
            return false;
        }
        const double tie_window = 1e-10 * (1.0 + std::fabs(min_ratio));
        std::size_t leave = kNoCol;
        for (std::size_t i = 0; i < t.rows; ++i) {
            const double aij = t.a[i][enter];
            if (aij < tolerances().lp_pivot) continue;
            if (t.rhs(i) / aij > min_ratio + tie_window) continue;
            if (leave == kNoCol ||
                (bland ? t.basis[i] < t.basis[leave] : aij > t.a[leave][enter]))
                leave = i;
        }
        pivot(t, obj, leave, enter);

        if (obj[t.cols] > last_value + 1e-12) {
            last_value = obj[t.cols];
            stalled = 0;
        } else {
            ++stalled;
        }
    }
    throw NumericalFailure("simplex iteration limit exceeded");
}

} // namespace

LPSolution solve_lp(const LPProblem& p) {
    const std::size_t n = p.num_vars;
    const std::size_t m_ineq = p.ineq_lhs.size();
    const std::size_t m = m_ineq + p.eq_lhs.size();

    for (std::size_t j = 0; j < n; ++j)
        if (!std::isfinite(p.objective[j]))
            throw DomainError("non-finite LP objective coefficient");

    const std::size_t n_split = 2 * n;
    const std::size_t slack0 = n_split;
    const std::size_t art0 = slack0 + m_ineq;

    Tableau t;
    t.rows = m;
    t.cols = art0 + m; // worst case: one artificial per row (unused ones stay zero)
    t.a.assign(m, std::vector<double>(t.cols + 1, 0.0));
    t.basis.assign(m, kNoCol);

    auto fill_row = [&](std::size_t i, const std::vector<double>& lhs, double rhs) {
        if (lhs.size() != n) throw DimensionMismatch("LP row width != num_vars");
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(lhs[j]) || !std::isfinite(rhs))
                throw DomainError("non-finite LP constraint coefficient");
            t.a[i][j] = lhs[j];
            t.a[i][n + j] = -lhs[j];
        }
        t.a[i][t.cols] = rhs;
    };

    for (std::size_t i = 0; i < m_ineq; ++i) {
        fill_row(i, p.ineq_lhs[i], p.ineq_rhs[i]);
        t.a[i][slack0 + i] = 1.0;
    }
    for (std::size_t i = 0; i < p.eq_lhs.size(); ++i)
        fill_row(m_ineq + i, p.eq_lhs[i], p.eq_rhs[i]);

    // Normalize to nonnegative rhs, then pick the starting basis: a +1 slack
    // where available, an artificial otherwise.
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.rhs(i) < 0.0)
            for (std::size_t j = 0; j <= t.cols; ++j) t.a[i][j] = -t.a[i][j];
        if (i < m_ineq && t.a[i][slack0 + i] > 0.0) {
            t.basis[i] = slack0 + i;
        } else {
            t.a[i][art0 + n_art] = 1.0;
            t.basis[i] = art0 + n_art;
            ++n_art;
        }
    }

    std::vector<bool> usable(t.cols, true);

    // Phase 1: maximize -(sum of artificials). Reduced costs start as the
    // negated sum of the artificial-basic rows.
    if (n_art > 0) {
        std::vector<double> obj(t.cols + 1, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < art0) continue;
            for (std::size_t j = 0; j <= t.cols; ++j) obj[j] -= t.a[i][j];
        }
        for (std::size_t k = 0; k < n_art; ++k) obj[art0 + k] = 0.0;
        run_simplex(t, obj, usable); // bounded below by construction
        if (obj[t.cols] < -tolerances().geometric)
            return {LPStatus::Infeasible, {}, 0.0};
        // Drive remaining artificials out of the basis; a row with no
        // eligible pivot is redundant and can be neutralized.
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < art0) continue;
            std::size_t c = kNoCol;
            for (std::size_t j = 0; j < art0; ++j)
                if (std::fabs(t.a[i][j]) > 1e-9) { c = j; break; }
            if (c != kNoCol) {
                pivot(t, obj, i, c);
            } else {
                for (std::size_t j = 0; j <= t.cols; ++j) t.a[i][j] = 0.0;
                t.a[i][t.basis[i]] = 1.0;
            }
        }
    }
    for (std::size_t k = 0; k < n_art; ++k) usable[art0 + k] = false;

    // Phase 2: real objective, reduced costs rebuilt from the current basis.
    std::vector<double> obj(t.cols + 1, 0.0);
    auto cost_of = [&](std::size_t j) -> double {
        if (j < n) return p.objective[j];
        if (j < n_split) return -p.objective[j - n];
        return 0.0;
    };
    for (std::size_t j = 0; j < t.cols; ++j) obj[j] = -cost_of(j);
    for (std::size_t i = 0; i < m; ++i) {
        const double cb = cost_of(t.basis[i]);
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= t.cols; ++j) obj[j] += cb * t.a[i][j];
    }

    if (!run_simplex(t, obj, usable))
        return {LPStatus::Unbounded, {}, 0.0};

    LPSolution sol;
    sol.status = LPStatus::Optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t b = t.basis[i];
        if (b < n) sol.x[b] += t.rhs(i);
        else if (b < n_split) sol.x[b - n] -= t.rhs(i);
    }
    sol.value = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.value += p.objective[j] * sol.x[j];
    return sol;
}

} // namespace rdr
