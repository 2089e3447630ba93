#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padeval/bootstrap.hpp"
#include "padeval/metrics.hpp"

namespace padeval {

struct MetricValue {
    std::string metric;  // "d_eer", "bpcer@5", ...
    double point = 0.0;
    std::optional<CiResult> ci;
};

// One evaluation condition, ready for report assembly.
struct ResultDoc {
    std::string row = "default";
    std::string condition = "default";
    std::vector<MetricValue> metrics;
};

// Computes d_eer plus BPCER at each APCER point (percent values, e.g.
// {5, 10}); with a config, every metric also gets a bootstrap CI.
ResultDoc evaluate_scores(const ScoreSet& scores, const std::vector<double>& apcer_percent_points,
                          const std::optional<BootstrapConfig>& bootstrap_cfg, unsigned workers = 1);

std::string result_to_json(const ResultDoc& doc);
void save_result(const std::string& path, const ResultDoc& doc);

}  // namespace padeval
