#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padeval/metrics.hpp"
#include "padeval/separability.hpp"

namespace padeval {

struct GaussianScoreSpec {
    double mu_bf = 0.0;
    double sigma_bf = 1.0;
    double mu_at = 1.0;
    double sigma_at = 1.0;
    std::size_t n_bf = 0;
    std::size_t n_at = 0;
    std::int64_t seed = 0;
};

struct GaussianEmbeddingSpec {
    std::size_t dim = 0;
    std::vector<double> mu_bf;
    std::vector<double> mu_at;
    double sigma_bf = 1.0;  // per-component deviation scale
    double sigma_at = 1.0;
    std::size_t n_bf = 0;
    std::size_t n_at = 0;
    std::int64_t seed = 0;
};

// Record i of the bonafide class draws from RNG stream 0 at sample index i,
// attacks from stream 1; ids are zero-padded so lexicographic order matches
// generation order.
ScoreSet gen_scores(const GaussianScoreSpec& spec);

// Component k of record i uses gaussian sample index i*dim + k on stream 0
// (bonafide) or 1 (attack).
EmbeddingSet gen_embeddings(const GaussianEmbeddingSpec& spec);

// Spec files are JSON objects mirroring the struct fields; mu_bf/mu_at in
// the embedding spec may be a single number, meaning that value in every
// component.
GaussianScoreSpec load_score_spec(const std::string& path);
GaussianEmbeddingSpec load_embedding_spec(const std::string& path);
GaussianScoreSpec score_spec_from_json_text(const std::string& text);
GaussianEmbeddingSpec embedding_spec_from_json_text(const std::string& text);

}  // namespace padeval
