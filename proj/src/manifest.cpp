#include "padeval/manifest.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "padeval/error.hpp"

namespace padeval {

namespace {

const std::array<std::string, 2> kSpectrumNames = {"NIR", "VIS"};
const std::array<std::string, 2> kLabelNames = {"bonafide", "attack"};
const std::array<std::string, 7> kPaiNames = {"none",      "textured_lens", "paper_print", "diseased",
                                              "synthetic", "display",       "print_display"};

constexpr char kHeader[] = "sample_id,dataset,sensor,spectrum,label,pai_category";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

}  // namespace

const std::string& to_string(Spectrum s) { return kSpectrumNames[static_cast<int>(s)]; }
const std::string& to_string(Label l) { return kLabelNames[static_cast<int>(l)]; }
const std::string& to_string(PaiCategory p) { return kPaiNames[static_cast<int>(p)]; }

Spectrum spectrum_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kSpectrumNames.size(); ++i)
        if (s == kSpectrumNames[i]) return static_cast<Spectrum>(i);
    throw InvalidEnumError("unknown spectrum '" + s + "'");
}

Label label_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kLabelNames.size(); ++i)
        if (s == kLabelNames[i]) return static_cast<Label>(i);
    throw InvalidEnumError("unknown label '" + s + "'");
}

PaiCategory pai_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kPaiNames.size(); ++i)
        if (s == kPaiNames[i]) return static_cast<PaiCategory>(i);
    throw InvalidEnumError("unknown pai_category '" + s + "'");
}

std::vector<SampleRecord> parse_manifest(std::istream& in, const LoadOptions& opts) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("manifest is empty, expected header line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        throw ParseError("bad manifest header, expected '" + std::string(kHeader) + "', got '" + line + "'");

    std::vector<SampleRecord> records;
    std::unordered_set<std::string> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 6)
            throw ParseError("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                             std::to_string(fields.size()));
        if (fields[0].empty()) throw ParseError("line " + std::to_string(line_no) + ": empty sample_id");

        SampleRecord rec;
        rec.sample_id = fields[0];
        rec.dataset = fields[1];
        rec.sensor = fields[2];
        rec.spectrum = spectrum_from_string(fields[3]);
        rec.label = label_from_string(fields[4]);
        rec.pai_category = pai_from_string(fields[5]);

        const bool is_bonafide = rec.label == Label::bonafide;
        const bool pai_none = rec.pai_category == PaiCategory::none;
        if (is_bonafide != pai_none)
            throw TaxonomyError("sample '" + rec.sample_id + "': label " + to_string(rec.label) +
                                " with pai_category " + to_string(rec.pai_category));
        if (opts.corpus_strict) {
            const bool is_vis = rec.spectrum == Spectrum::vis;
            if (is_vis != (rec.dataset == "VSIA"))
                throw TaxonomyError("sample '" + rec.sample_id + "': spectrum " + to_string(rec.spectrum) +
                                    " with dataset " + rec.dataset + " violates the VIS<->VSIA convention");
        }

        if (!seen.insert(rec.sample_id).second) {
            if (opts.dedupe_keep_first) continue;
            throw DuplicateIdError("duplicate sample_id '" + rec.sample_id + "'");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<SampleRecord> load_manifest(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest '" + path + "'");
    return parse_manifest(in, opts);
}

void write_manifest(std::ostream& out, const std::vector<SampleRecord>& records) {
    out << kHeader << '\n';
    for (const auto& r : records) {
        out << r.sample_id << ',' << r.dataset << ',' << r.sensor << ',' << to_string(r.spectrum) << ','
            << to_string(r.label) << ',' << to_string(r.pai_category) << '\n';
    }
}

void save_manifest(const std::string& path, const std::vector<SampleRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write manifest '" + path + "'");
    write_manifest(out, records);
    if (!out) throw IoError("write to '" + path + "' failed");
}

ManifestSummary summarize(const std::vector<SampleRecord>& records) {
    ManifestSummary s;
    for (const auto& r : records) {
        ++s.cells[{r.dataset, r.label, r.pai_category}];
        const std::string taxonomy = r.label == Label::bonafide ? "bonafide" : to_string(r.pai_category);
        ++s.taxonomy_subtotals[taxonomy];
        ++s.total;
    }
    return s;
}

std::string summary_csv(const ManifestSummary& summary) {
    std::ostringstream out;
    out << "dataset,label,pai_category,count\n";
    for (const auto& [key, count] : summary.cells)
        out << key.dataset << ',' << to_string(key.label) << ',' << to_string(key.pai_category) << ',' << count
            << '\n';
    for (const auto& [taxonomy, count] : summary.taxonomy_subtotals)
        out << "subtotal," << taxonomy << ",," << count << '\n';
    out << "total,,," << summary.total << '\n';
    return out.str();
}

}  // namespace padeval
