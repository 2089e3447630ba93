#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padeval {

enum class ScoreDirection {
    attack_high,    // larger score = more attack-like; decision rule: attack iff score >= threshold
    bonafide_high,  // larger score = more bonafide-like; handled by negating scores internally
};

struct ScoreEntry {
    std::string sample_id;
    bool is_attack = false;
    double score = 0.0;
};

struct ScoreSet {
    std::vector<ScoreEntry> entries;
    ScoreDirection direction = ScoreDirection::attack_high;

    std::size_t count(bool attack) const;
};

struct OperatingPoint {
    double threshold = 0.0;
    double apcer = 0.0;  // attacks accepted as bonafide (score < threshold), fraction of attacks
    double bpcer = 0.0;  // bonafide rejected as attacks (score >= threshold), fraction of bonafide
};

struct MetricResult {
    double d_eer = 0.0;
    double bpcer_at_5 = 0.0;
    double bpcer_at_10 = 0.0;
};

// One point per candidate threshold: midpoints between consecutive distinct
// sorted scores plus a below-min and an above-max sentinel. Points come out
// sorted by threshold, APCER non-decreasing, BPCER non-increasing. Throws
// OneClassError if either class is missing, ValidationError on non-finite
// scores.
std::vector<OperatingPoint> operating_points(const ScoreSet& scores);

// Equal error rate on the piecewise-linear interpolation of the operating
// point sequence; exact step crossings are returned as-is.
double d_eer(const ScoreSet& scores);

// Minimum BPCER over operating points with APCER <= alpha. Requires
// 0 < alpha < 1.
double bpcer_at_apcer(const ScoreSet& scores, double alpha);

MetricResult standard_metrics(const ScoreSet& scores);

// Scores CSV: header "sample_id,label,score".
ScoreSet parse_scores(std::istream& in);
ScoreSet load_scores(const std::string& path);
void write_scores(std::ostream& out, const ScoreSet& scores);
void save_scores(const std::string& path, const ScoreSet& scores);

}  // namespace padeval
