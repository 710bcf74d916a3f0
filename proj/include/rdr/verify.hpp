#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rdr {

struct TrialFailure {
    std::uint64_t seed = 0;     // replays the trial in isolation
    std::string description;    // full input of the violated trial
    double worst_slack = 0.0;
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    int skipped = 0; // trials rejected by typed precondition errors
    std::vector<TrialFailure> failures;
    double elapsed_s = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Names of the available property suites:
///   quasiconcavity        inradius over a moving simplex vertex dips nowhere
///                         below the endpoint minimum, for arbitrary gauges
///   ratio-constancy       barycentric weight ratio of matched inball points
///                         is independent of the probe point
///   extreme-minimization  the apex minimizing the inradius over a polygon of
///                         candidates is one of the polygon's vertices
///   starshape             diagram point of (1-lambda)K + lambda B is affine
///   profile-monotonicity scalar inradius profile f is strictly decreasing,
///                         with its derivative-split identities
///   equality-cases        five-diametral simplices attain the inradius bound
///   minimality            random inscribed simplices respect the bound
///   strict-monotonicity   growing a simplex strictly grows the inradius
///   oracle-soundness      triples of random hulls pass the complete system
const std::vector<std::string>& suite_names();

/// Runs a suite. Deterministic given root_seed; grid-based suites
/// (profile-monotonicity, equality-cases) use `trials` as grid density and
/// ignore the seed. Failures carry the derived per-trial seed.
SuiteReport run_suite(const std::string& suite_id, int trials, std::uint64_t root_seed);

/// JSON form: {"suite":...,"trials":N,"skipped":K,"failures":[...],"elapsed_s":...}
std::string report_to_json(const SuiteReport& report);

} // namespace rdr
