#pragma once

#include <optional>
#include <vector>

namespace rdr {

/// Solves the small dense square system M x = b by Gauss-Jordan elimination
/// with partial pivoting. Returns nullopt when a pivot falls below tol.
std::optional<std::vector<double>> solve_linear(std::vector<std::vector<double>> m,
                                                std::vector<double> b, double tol);

} // namespace rdr
