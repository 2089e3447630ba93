#include "padeval/bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "padeval/error.hpp"
#include "padeval/rng.hpp"

namespace padeval {

ScoreSet resample(const ScoreSet& scores, std::int64_t master_seed, std::uint64_t replicate) {
    std::vector<const ScoreEntry*> bf, at;
    for (const auto& e : scores.entries) (e.is_attack ? at : bf).push_back(&e);
    if (bf.empty() || at.empty())
        throw OneClassError("score set needs at least one bonafide and one attack entry");

    const auto key = static_cast<std::uint64_t>(master_seed);
    ScoreSet out;
    out.direction = scores.direction;
    out.entries.reserve(scores.entries.size());
    std::uint64_t draw = 0;
    for (std::size_t i = 0; i < bf.size(); ++i, ++draw)
        out.entries.push_back(*bf[rng::index(rng::word(key, replicate, draw), bf.size())]);
    for (std::size_t j = 0; j < at.size(); ++j, ++draw)
        out.entries.push_back(*at[rng::index(rng::word(key, replicate, draw), at.size())]);
    return out;
}

double sorted_quantile(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = q * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

CiResult bootstrap_ci(const ScoreSet& scores, const MetricFn& metric, const BootstrapConfig& cfg,
                      unsigned workers) {
    if (cfg.replicates < 1) throw ValidationError("bootstrap replicates must be >= 1");
    if (!(cfg.ci_level > 0.0 && cfg.ci_level < 1.0)) throw ValidationError("ci_level must be in (0,1)");

    const std::size_t n = cfg.replicates;
    std::vector<double> values(n);
    if (workers <= 1) {
        for (std::size_t r = 0; r < n; ++r) values[r] = metric(resample(scores, cfg.master_seed, r));
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&] {
            while (true) {
                const std::size_t r = next.fetch_add(64);
                if (r >= n) return;
                const std::size_t end = std::min(r + 64, n);
                for (std::size_t i = r; i < end; ++i) values[i] = metric(resample(scores, cfg.master_seed, i));
            }
        };
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run);
        for (auto& t : threads) t.join();
    }

    CiResult res;
    res.point_estimate = metric(scores);
    double sum = 0.0;
    for (const double v : values) sum += v;  // replicate-index order, independent of scheduling
    res.mean = sum / static_cast<double>(n);

    std::sort(values.begin(), values.end());
    const double tail = (1.0 - cfg.ci_level) / 2.0;
    res.lo = sorted_quantile(values, tail);
    res.hi = sorted_quantile(values, 1.0 - tail);
    res.half_width = (res.hi - res.lo) / 2.0;
    return res;
}

}  // namespace padeval
