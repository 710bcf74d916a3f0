#pragma once

namespace rdr {

/// Central tolerance record. All geometric predicates and numerical guards
/// read from one instance so the policy can be changed in a single place
/// (the CLI honors the RDR_TOL environment variable through this record).
struct Tolerances {
    double geometric   = 1e-9;  // point/halfspace predicates, LP feasibility
    double dedupe      = 1e-12; // vertex deduplication
    double contact     = 1e-7;  // circumsphere contact detection
    double certificate = 1e-8;  // containment-certificate residual
    double tight       = 1e-9;  // equality detection in feasibility verdicts
    double lp_pivot    = 1e-13; // simplex pivot magnitude floor
};

/// Process-wide tolerance record. Intended to be adjusted once at startup
/// (if at all); all library functions read it but never write it.
Tolerances& tolerances();

} // namespace rdr
