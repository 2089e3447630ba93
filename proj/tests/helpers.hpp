#pragma once

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "padeval/metrics.hpp"

#include "oracles.hpp"

namespace testutil {

inline padeval::ScoreSet make_scores(const std::vector<double>& bonafide, const std::vector<double>& attacks,
                                     padeval::ScoreDirection direction = padeval::ScoreDirection::attack_high) {
    padeval::ScoreSet set;
    set.direction = direction;
    std::size_t n = 0;
    for (const double s : bonafide) set.entries.push_back({"bf" + std::to_string(n++), false, s});
    for (const double s : attacks) set.entries.push_back({"at" + std::to_string(n++), true, s});
    return set;
}

inline std::vector<oracle::LabeledScore> to_oracle(const padeval::ScoreSet& set) {
    std::vector<oracle::LabeledScore> out;
    out.reserve(set.entries.size());
    const bool flip = set.direction == padeval::ScoreDirection::bonafide_high;
    for (const auto& e : set.entries) out.push_back({flip ? -e.score : e.score, e.is_attack});
    return out;
}

// Random score sets with deliberate ties: values drawn from a small lattice.
inline padeval::ScoreSet random_tied_scores(std::mt19937_64& gen, std::size_t min_per_class = 2,
                                            std::size_t max_per_class = 50) {
    std::uniform_int_distribution<std::size_t> size_dist(min_per_class, max_per_class);
    std::uniform_int_distribution<int> lattice(0, 12);
    std::vector<double> bf(size_dist(gen));
    std::vector<double> at(size_dist(gen));
    for (auto& s : bf) s = lattice(gen) / 4.0;
    for (auto& s : at) s = lattice(gen) / 4.0 + 0.75;
    return make_scores(bf, at);
}

class TempDir {
  public:
    explicit TempDir(const std::string& stem) {
        auto base = std::filesystem::temp_directory_path();
        for (int attempt = 0; attempt < 1000; ++attempt) {
            auto candidate = base / (stem + "." + std::to_string(::getpid()) + "." + std::to_string(attempt));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp dir for " + stem);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testutil
