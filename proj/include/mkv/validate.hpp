#pragma once

#include <string>
#include <vector>

#include "mkv/model.hpp"

namespace mkv {

struct ProbeConfig {
    int samples = 200;
    double box_radius = 2.0;
    double horizon = 1.0;
    StreamSpec spec;
    double tol = 1e-9;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    double estimate = 0.0;  // worst margin or ratio observed
    double bound = 0.0;     // what it was compared against
    std::string witness;    // where the worst case happened
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

// Sampled evidence that the model matches its declared structure: drift
// affinity in x, midpoint matrix-convexity of sigma, sigma preceq theta,
// Lipschitz / Hoelder / growth ratios against the declared constants, and
// monotonicity in the law along mean-preserving spread pairs. Failures are
// report entries, not exceptions.
ValidationReport validate_assumptions(const MKVModel& model, const ProbeConfig& probe);

}  // namespace mkv
