#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace padeval {

enum class Spectrum { nir, vis };
enum class Label { bonafide, attack };
enum class PaiCategory { none, textured_lens, paper_print, diseased, synthetic, display, print_display };

const std::string& to_string(Spectrum s);
const std::string& to_string(Label l);
const std::string& to_string(PaiCategory p);
Spectrum spectrum_from_string(const std::string& s);
Label label_from_string(const std::string& s);
PaiCategory pai_from_string(const std::string& s);

struct SampleRecord {
    std::string sample_id;
    std::string dataset;
    std::string sensor;
    Spectrum spectrum = Spectrum::nir;
    Label label = Label::bonafide;
    PaiCategory pai_category = PaiCategory::none;

    bool operator==(const SampleRecord&) const = default;
};

struct LoadOptions {
    // Treat a repeated sample_id as an error (default) or keep the first
    // occurrence and drop the rest.
    bool dedupe_keep_first = false;
    // Enforce the corpus convention that VIS data comes from VSIA and
    // VSIA data is VIS.
    bool corpus_strict = false;
};

// Per-(dataset, label, pai_category) counts plus taxonomy subtotals. The
// taxonomy of a record is "bonafide" for bona fide samples and the PAI
// category name for attacks.
struct ManifestSummary {
    struct CellKey {
        std::string dataset;
        Label label;
        PaiCategory pai_category;
        auto operator<=>(const CellKey&) const = default;
    };
    std::map<CellKey, std::size_t> cells;
    std::map<std::string, std::size_t> taxonomy_subtotals;
    std::size_t total = 0;
};

// Validates field values, the bonafide<->none pairing, and sample_id
// uniqueness. Throws ParseError, InvalidEnumError, TaxonomyError,
// DuplicateIdError.
std::vector<SampleRecord> parse_manifest(std::istream& in, const LoadOptions& opts = {});
std::vector<SampleRecord> load_manifest(const std::string& path, const LoadOptions& opts = {});

void write_manifest(std::ostream& out, const std::vector<SampleRecord>& records);
void save_manifest(const std::string& path, const std::vector<SampleRecord>& records);

ManifestSummary summarize(const std::vector<SampleRecord>& records);

// Summary as CSV text: one row per cell, then subtotal and total rows.
std::string summary_csv(const ManifestSummary& summary);

}  // namespace padeval
