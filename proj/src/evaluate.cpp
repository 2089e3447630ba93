#include "padeval/evaluate.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "padeval/error.hpp"

namespace padeval {

namespace {

std::string bpcer_metric_name(double percent) {
    char buf[48];
    if (percent == static_cast<double>(static_cast<long long>(percent)))
        std::snprintf(buf, sizeof(buf), "bpcer@%lld", static_cast<long long>(percent));
    else
        std::snprintf(buf, sizeof(buf), "bpcer@%g", percent);
    return buf;
}

}  // namespace

ResultDoc evaluate_scores(const ScoreSet& scores, const std::vector<double>& apcer_percent_points,
                          const std::optional<BootstrapConfig>& bootstrap_cfg, unsigned workers) {
    ResultDoc doc;

    std::vector<std::pair<std::string, MetricFn>> plan;
    plan.emplace_back("d_eer", [](const ScoreSet& s) { return d_eer(s); });
    for (const double pct : apcer_percent_points) {
        if (!(pct > 0.0 && pct < 100.0)) throw ValidationError("APCER points must be in (0,100) percent");
        plan.emplace_back(bpcer_metric_name(pct),
                          [alpha = pct / 100.0](const ScoreSet& s) { return bpcer_at_apcer(s, alpha); });
    }

    for (const auto& [name, fn] : plan) {
        MetricValue mv;
        mv.metric = name;
        if (bootstrap_cfg) {
            mv.ci = bootstrap_ci(scores, fn, *bootstrap_cfg, workers);
            mv.point = mv.ci->point_estimate;
        } else {
            mv.point = fn(scores);
        }
        doc.metrics.push_back(std::move(mv));
    }
    return doc;
}

std::string result_to_json(const ResultDoc& doc) {
    nlohmann::ordered_json j;
    j["row"] = doc.row;
    j["condition"] = doc.condition;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& m : doc.metrics) {
        nlohmann::ordered_json mj;
        mj["metric"] = m.metric;
        mj["point"] = m.point;
        if (m.ci) {
            mj["mean"] = m.ci->mean;
            mj["lo"] = m.ci->lo;
            mj["hi"] = m.ci->hi;
            mj["half_width"] = m.ci->half_width;
        }
        arr.push_back(std::move(mj));
    }
    j["metrics"] = std::move(arr);
    return j.dump(2) + "\n";
}

void save_result(const std::string& path, const ResultDoc& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write results file '" + path + "'");
    out << result_to_json(doc);
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace padeval
