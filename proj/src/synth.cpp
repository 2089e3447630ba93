#include "padeval/synth.hpp"

#include <fstream>

#include <json.hpp>

#include "padeval/error.hpp"
#include "padeval/rng.hpp"

namespace padeval {

namespace {

std::string padded_id(const char* prefix, std::size_t i) {
    std::string num = std::to_string(i);
    return std::string(prefix) + std::string(num.size() < 8 ? 8 - num.size() : 0, '0') + num;
}

void check_positive(double sigma, const char* name) {
    if (!(sigma > 0.0)) throw ValidationError(std::string(name) + " must be positive");
}

nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open spec '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad spec JSON in '" + path + "': " + e.what());
    }
}

std::vector<double> mean_vector(const nlohmann::json& j, std::size_t dim) {
    if (j.is_number()) return std::vector<double>(dim, j.get<double>());
    auto v = j.get<std::vector<double>>();
    if (v.size() != dim)
        throw ValidationError("mean vector has " + std::to_string(v.size()) + " components, dim is " +
                              std::to_string(dim));
    return v;
}

}  // namespace

ScoreSet gen_scores(const GaussianScoreSpec& spec) {
    check_positive(spec.sigma_bf, "sigma_bf");
    check_positive(spec.sigma_at, "sigma_at");
    if (spec.n_bf == 0 || spec.n_at == 0) throw ValidationError("n_bf and n_at must be positive");

    const auto key = static_cast<std::uint64_t>(spec.seed);
    ScoreSet set;
    set.entries.reserve(spec.n_bf + spec.n_at);
    for (std::size_t i = 0; i < spec.n_bf; ++i)
        set.entries.push_back({padded_id("bf", i), false, spec.mu_bf + spec.sigma_bf * rng::gaussian(key, 0, i)});
    for (std::size_t i = 0; i < spec.n_at; ++i)
        set.entries.push_back({padded_id("at", i), true, spec.mu_at + spec.sigma_at * rng::gaussian(key, 1, i)});
    return set;
}

EmbeddingSet gen_embeddings(const GaussianEmbeddingSpec& spec) {
    check_positive(spec.sigma_bf, "sigma_bf");
    check_positive(spec.sigma_at, "sigma_at");
    if (spec.dim == 0) throw ValidationError("dim must be positive");
    if (spec.n_bf == 0 || spec.n_at == 0) throw ValidationError("n_bf and n_at must be positive");
    if (spec.mu_bf.size() != spec.dim || spec.mu_at.size() != spec.dim)
        throw ValidationError("mean vectors must have dim components");

    const auto key = static_cast<std::uint64_t>(spec.seed);
    EmbeddingSet set;
    set.dim = spec.dim;
    set.entries.reserve(spec.n_bf + spec.n_at);
    for (std::size_t i = 0; i < spec.n_bf; ++i) {
        EmbeddingEntry e{padded_id("bf", i), false, {}};
        e.vec.reserve(spec.dim);
        for (std::size_t k = 0; k < spec.dim; ++k)
            e.vec.push_back(spec.mu_bf[k] + spec.sigma_bf * rng::gaussian(key, 0, i * spec.dim + k));
        set.entries.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < spec.n_at; ++i) {
        EmbeddingEntry e{padded_id("at", i), true, {}};
        e.vec.reserve(spec.dim);
        for (std::size_t k = 0; k < spec.dim; ++k)
            e.vec.push_back(spec.mu_at[k] + spec.sigma_at * rng::gaussian(key, 1, i * spec.dim + k));
        set.entries.push_back(std::move(e));
    }
    return set;
}

namespace {

GaussianScoreSpec score_spec_from_json(const nlohmann::json& j) {
    try {
        GaussianScoreSpec spec;
        spec.mu_bf = j.at("mu_bf").get<double>();
        spec.sigma_bf = j.at("sigma_bf").get<double>();
        spec.mu_at = j.at("mu_at").get<double>();
        spec.sigma_at = j.at("sigma_at").get<double>();
        spec.n_bf = j.at("n_bf").get<std::size_t>();
        spec.n_at = j.at("n_at").get<std::size_t>();
        spec.seed = j.at("seed").get<std::int64_t>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad score spec: ") + e.what());
    }
}

GaussianEmbeddingSpec embedding_spec_from_json(const nlohmann::json& j) {
    try {
        GaussianEmbeddingSpec spec;
        spec.dim = j.at("dim").get<std::size_t>();
        spec.mu_bf = mean_vector(j.at("mu_bf"), spec.dim);
        spec.mu_at = mean_vector(j.at("mu_at"), spec.dim);
        spec.sigma_bf = j.at("sigma_bf").get<double>();
        spec.sigma_at = j.at("sigma_at").get<double>();
        spec.n_bf = j.at("n_bf").get<std::size_t>();
        spec.n_at = j.at("n_at").get<std::size_t>();
        spec.seed = j.at("seed").get<std::int64_t>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad embedding spec: ") + e.what());
    }
}

nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad spec JSON: ") + e.what());
    }
}

}  // namespace

GaussianScoreSpec score_spec_from_json_text(const std::string& text) {
    return score_spec_from_json(parse_json_text(text));
}

GaussianEmbeddingSpec embedding_spec_from_json_text(const std::string& text) {
    return embedding_spec_from_json(parse_json_text(text));
}

GaussianScoreSpec load_score_spec(const std::string& path) {
    return score_spec_from_json(parse_json_file(path));
}

GaussianEmbeddingSpec load_embedding_spec(const std::string& path) {
    return embedding_spec_from_json(parse_json_file(path));
}

}  // namespace padeval
