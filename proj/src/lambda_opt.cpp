#include "gardner/lambda_opt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "gardner/simulate.hpp"

namespace gardner {

namespace {

std::vector<double> candidate_grid(double lo, double hi, double step) {
    std::vector<double> out;
    const long count = std::lround((hi - lo) / step);
    out.reserve(static_cast<size_t>(count) + 2);
    for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    if (out.empty() || out.back() < hi - 0.5 * step) out.push_back(hi);
    return out;
}

// Index-stable parallel map so the reduction stays deterministic.
std::vector<double> evaluate_all(const SimulationSetup& base, const std::vector<double>& lambdas) {
    std::vector<double> values(lambdas.size(), 0.0);
    const auto eval_one = [&](size_t i) {
        SimulationSetup s = base;
        s.params.lambda = lambdas[i];
        values[i] = linf_at_end(s);
    };
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = std::min<unsigned>(hw == 0 ? 1 : hw, 8);
    if (workers <= 1 || lambdas.size() < 4) {
        for (size_t i = 0; i < lambdas.size(); ++i) eval_one(i);
        return values;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < lambdas.size(); i = next.fetch_add(1))
                eval_one(i);
        });
    for (auto& th : pool) th.join();
    return values;
}

}  // namespace

ScanResult scan(const ExperimentPreset& preset, const ScanSpec& spec) {
    if (!preset.exact)
        throw std::invalid_argument("scan: preset has no exact solution to score against");
    if (!(spec.lo <= spec.hi)) throw std::invalid_argument("scan: requires lo <= hi");
    if (!(spec.coarse_step > 0.0)) throw std::invalid_argument("scan: coarse_step must be positive");

    SimulationSetup base = setup_from(preset);
    if (spec.objective_time > 0.0) base.t_end = spec.objective_time;
    required_steps(base.t_end, base.dt);

    ScanResult result;
    auto record = [&](const std::vector<double>& ls, const std::vector<double>& vs) {
        for (size_t i = 0; i < ls.size(); ++i) result.trace.push_back({ls[i], vs[i]});
    };
    auto better = [](const ScanPoint& a, const ScanPoint& b) {
        if (a.linf != b.linf) return a.linf < b.linf;
        return a.lambda < b.lambda;
    };

    std::vector<double> candidates;
    if (spec.lo == spec.hi) {
        candidates = {spec.lo};
    } else {
        candidates = candidate_grid(spec.lo, spec.hi, spec.coarse_step);
        if (spec.lo < 0.0 && spec.hi > 0.0) candidates.push_back(0.0);  // dominance anchor
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    std::vector<double> values = evaluate_all(base, candidates);
    record(candidates, values);
    ScanPoint incumbent{candidates[0], values[0]};
    for (size_t i = 1; i < candidates.size(); ++i)
        if (better({candidates[i], values[i]}, incumbent)) incumbent = {candidates[i], values[i]};

    double shrink_step = spec.coarse_step;
    for (int round = 0; round < spec.refine_rounds && shrink_step > 1e-6 && spec.lo < spec.hi;
         ++round) {
        const double window = shrink_step;
        shrink_step /= 10.0;
        const double lo = std::max(spec.lo, incumbent.lambda - window);
        const double hi = std::min(spec.hi, incumbent.lambda + window);
        candidates = candidate_grid(lo, hi, shrink_step);
        values = evaluate_all(base, candidates);
        record(candidates, values);
        for (size_t i = 0; i < candidates.size(); ++i)
            if (better({candidates[i], values[i]}, incumbent)) incumbent = {candidates[i], values[i]};
    }

    std::sort(result.trace.begin(), result.trace.end(),
              [](const ScanPoint& a, const ScanPoint& b) { return a.lambda < b.lambda; });
    result.trace.erase(std::unique(result.trace.begin(), result.trace.end(),
                                   [](const ScanPoint& a, const ScanPoint& b) {
                                       return a.lambda == b.lambda;
                                   }),
                       result.trace.end());
    result.lambda_star = incumbent.lambda;
    result.linf_star = incumbent.linf;
    return result;
}

}  // namespace gardner
