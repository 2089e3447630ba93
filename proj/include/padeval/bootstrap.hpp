#pragma once

#include <cstdint>
#include <functional>

#include "padeval/metrics.hpp"

namespace padeval {

struct BootstrapConfig {
    std::uint64_t replicates = 1000;
    double ci_level = 0.95;
    std::int64_t master_seed = 0;
};

struct CiResult {
    double point_estimate = 0.0;  // metric on the original data
    double mean = 0.0;            // mean over replicate values
    double lo = 0.0;              // lower percentile bound
    double hi = 0.0;              // upper percentile bound
    double half_width = 0.0;      // (hi - lo) / 2

    bool operator==(const CiResult&) const = default;
};

using MetricFn = std::function<double(const ScoreSet&)>;

// Class-stratified resample with replacement: bonafide entries are drawn
// from the bonafide pool at the original bonafide count, attacks likewise.
// Replicate r of a run keyed by master_seed draws bonafide i from RNG word
// (master_seed, r, i) and attack j from (master_seed, r, n_bonafide + j),
// so every replicate is reproducible in isolation.
ScoreSet resample(const ScoreSet& scores, std::int64_t master_seed, std::uint64_t replicate);

// Percentile bootstrap CI. Replicates are independent; with workers > 1
// they are evaluated in parallel and the result is bit-identical to the
// sequential one because each replicate's randomness depends only on
// (master_seed, replicate index). Quantiles use linear interpolation on
// the sorted replicate values.
CiResult bootstrap_ci(const ScoreSet& scores, const MetricFn& metric, const BootstrapConfig& cfg,
                      unsigned workers = 1);

// Linear-interpolation empirical quantile of a sorted vector, q in [0,1].
double sorted_quantile(const std::vector<double>& sorted, double q);

}  // namespace padeval
