#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padeval {

struct EmbeddingEntry {
    std::string sample_id;
    bool is_attack = false;
    std::vector<double> vec;
};

struct EmbeddingSet {
    std::size_t dim = 0;
    std::vector<EmbeddingEntry> entries;
};

// Mean gap over summed RMS dispersion, with an explicit marker for the
// zero-dispersion, nonzero-gap case instead of a floating infinity.
struct SeparabilityRatio {
    double value = 0.0;
    bool is_infinite = false;
};

struct ClassGeometry {
    std::vector<double> mu_bf;
    std::vector<double> mu_at;
    double sigma_bf = 0.0;  // RMS distance of bonafide samples to mu_bf
    double sigma_at = 0.0;
    double mean_gap = 0.0;  // ||mu_bf - mu_at||
    SeparabilityRatio ratio;
};

struct ShiftReport {
    double r_in = 0.0;
    double r_shift = 0.0;
    double srd = 0.0;  // percent, positive when separability degrades
    double ddp = 0.0;  // percent, positive when total dispersion tightens
};

// Throws OneClassError when a label is missing, DegenerateDispersionError
// when both dispersions are zero and the class means coincide.
ClassGeometry class_geometry(const EmbeddingSet& emb);

// in_domain is typically a run's validation partition, shifted its test
// partition. Throws DimensionMismatchError, ZeroBaselineError (r_in = 0 or
// zero in-domain dispersion) and DegenerateDispersionError (infinite
// shifted ratio).
ShiftReport shift_report(const EmbeddingSet& in_domain, const EmbeddingSet& shifted);

// Text form: CSV with header "sample_id,label,d0,...,d{D-1}".
EmbeddingSet parse_embeddings_csv(std::istream& in);
void write_embeddings_csv(std::ostream& out, const EmbeddingSet& emb);

// Binary form: magic "EMB1", u32-le dim, then per record u32-le id length,
// id bytes, one label byte (0 bonafide, 1 attack), dim f32-le components.
EmbeddingSet parse_embeddings_binary(std::istream& in);
void write_embeddings_binary(std::ostream& out, const EmbeddingSet& emb);

// Sniffs the magic bytes to pick the binary or CSV parser.
EmbeddingSet load_embeddings(const std::string& path);
void save_embeddings_csv(const std::string& path, const EmbeddingSet& emb);
void save_embeddings_binary(const std::string& path, const EmbeddingSet& emb);

}  // namespace padeval
