#pragma once

#include <vector>

#include "gardner/problems.hpp"

namespace gardner {

/// Coarse-to-fine search window for the extension parameter. Each refinement
/// round shrinks the step tenfold around the incumbent until the step reaches
/// 1e-6 or the round budget runs out. objective_time <= 0 means "use the
/// preset's t_end".
struct ScanSpec {
    double lo = -1.0;
    double hi = 1.0;
    double coarse_step = 0.01;
    int refine_rounds = 6;
    double objective_time = 0.0;
};

struct ScanPoint {
    double lambda;
    double linf;
};

struct ScanResult {
    double lambda_star = 0.0;
    double linf_star = 0.0;
    std::vector<ScanPoint> trace;  // every evaluated candidate, sorted by lambda
};

/// Runs one full simulation per candidate lambda (re-fitting the initial
/// coefficients each time) and minimizes the nodal maximum error at the
/// objective time. Candidates may be evaluated concurrently; ties break
/// toward the smaller lambda. The preset must carry an exact solution.
ScanResult scan(const ExperimentPreset& preset, const ScanSpec& spec);

}  // namespace gardner
