#include "padeval/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "padeval/error.hpp"
#include "padeval/manifest.hpp"

namespace padeval {

namespace {

// Per-class scores under the attack_high convention, sorted ascending.
struct Pools {
    std::vector<double> bonafide;
    std::vector<double> attack;
};

Pools sorted_pools(const ScoreSet& scores) {
    Pools p;
    const double sign = scores.direction == ScoreDirection::attack_high ? 1.0 : -1.0;
    for (const auto& e : scores.entries) {
        if (!std::isfinite(e.score))
            throw ValidationError("non-finite score for sample '" + e.sample_id + "'");
        (e.is_attack ? p.attack : p.bonafide).push_back(sign * e.score);
    }
    if (p.bonafide.empty() || p.attack.empty())
        throw OneClassError("score set needs at least one bonafide and one attack entry");
    std::sort(p.bonafide.begin(), p.bonafide.end());
    std::sort(p.attack.begin(), p.attack.end());
    return p;
}

std::vector<OperatingPoint> points_from_pools(const Pools& p) {
    std::vector<double> all;
    all.reserve(p.bonafide.size() + p.attack.size());
    all.insert(all.end(), p.bonafide.begin(), p.bonafide.end());
    all.insert(all.end(), p.attack.begin(), p.attack.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<double> thresholds;
    thresholds.reserve(all.size() + 1);
    thresholds.push_back(all.front() - 1.0);  // everything classified attack
    for (std::size_t i = 0; i + 1 < all.size(); ++i) thresholds.push_back((all[i] + all[i + 1]) / 2.0);
    thresholds.push_back(all.back() + 1.0);  // everything classified bonafide

    const auto n_bf = static_cast<double>(p.bonafide.size());
    const auto n_at = static_cast<double>(p.attack.size());
    std::vector<OperatingPoint> points;
    points.reserve(thresholds.size());
    for (const double tau : thresholds) {
        // attacks with score < tau are accepted as bonafide
        const auto at_below = std::lower_bound(p.attack.begin(), p.attack.end(), tau) - p.attack.begin();
        // bonafide with score >= tau are rejected as attacks
        const auto bf_at_or_above =
            p.bonafide.end() - std::lower_bound(p.bonafide.begin(), p.bonafide.end(), tau);
        points.push_back({tau, static_cast<double>(at_below) / n_at, static_cast<double>(bf_at_or_above) / n_bf});
    }
    return points;
}

double eer_from_points(const std::vector<OperatingPoint>& points) {
    // diff = BPCER - APCER is non-increasing along the sequence, from +1 at
    // the below-min sentinel to -1 at the above-max one.
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double diff = points[k].bpcer - points[k].apcer;
        if (diff == 0.0) return points[k].apcer;
        if (diff < 0.0) {
            const double prev = points[k - 1].bpcer - points[k - 1].apcer;
            const double t = prev / (prev - diff);
            return points[k - 1].apcer + t * (points[k].apcer - points[k - 1].apcer);
        }
    }
    return points.back().apcer;  // unreachable: the last point has diff = -1
}

}  // namespace

std::size_t ScoreSet::count(bool attack) const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.is_attack == attack;
    return n;
}

std::vector<OperatingPoint> operating_points(const ScoreSet& scores) {
    return points_from_pools(sorted_pools(scores));
}

double d_eer(const ScoreSet& scores) { return eer_from_points(points_from_pools(sorted_pools(scores))); }

double bpcer_at_apcer(const ScoreSet& scores, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must be in (0,1)");
    const auto points = points_from_pools(sorted_pools(scores));
    double best = 1.0;  // the below-min sentinel has APCER 0, BPCER 1
    for (const auto& pt : points)
        if (pt.apcer <= alpha) best = std::min(best, pt.bpcer);
    return best;
}

MetricResult standard_metrics(const ScoreSet& scores) {
    const auto points = points_from_pools(sorted_pools(scores));
    MetricResult r;
    r.d_eer = eer_from_points(points);
    auto bpcer_at = [&points](double alpha) {
        double best = 1.0;
        for (const auto& pt : points)
            if (pt.apcer <= alpha) best = std::min(best, pt.bpcer);
        return best;
    };
    r.bpcer_at_5 = bpcer_at(0.05);
    r.bpcer_at_10 = bpcer_at(0.10);
    return r;
}

ScoreSet parse_scores(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("scores file is empty, expected header line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "sample_id,label,score")
        throw ParseError("bad scores header, expected 'sample_id,label,score', got '" + line + "'");

    ScoreSet set;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto first = line.find(',');
        const auto second = first == std::string::npos ? std::string::npos : line.find(',', first + 1);
        if (second == std::string::npos || line.find(',', second + 1) != std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields");
        ScoreEntry e;
        e.sample_id = line.substr(0, first);
        if (e.sample_id.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty sample_id");
        e.is_attack = label_from_string(line.substr(first + 1, second - first - 1)) == Label::attack;
        const char* begin = line.data() + second + 1;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, e.score);
        if (ec != std::errc() || ptr != end || !std::isfinite(e.score))
            throw ParseError("line " + std::to_string(line_no) + ": bad score '" + std::string(begin, end) + "'");
        set.entries.push_back(std::move(e));
    }
    return set;
}

ScoreSet load_scores(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scores '" + path + "'");
    return parse_scores(in);
}

void write_scores(std::ostream& out, const ScoreSet& scores) {
    out << "sample_id,label,score\n";
    char buf[64];
    for (const auto& e : scores.entries) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), e.score);
        out << e.sample_id << ',' << (e.is_attack ? "attack" : "bonafide") << ','
            << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
    }
}

void save_scores(const std::string& path, const ScoreSet& scores) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write scores '" + path + "'");
    write_scores(out, scores);
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace padeval
