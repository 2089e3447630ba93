#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padeval/manifest.hpp"

namespace padeval {

enum class UnseenFactor { pai, dataset, spectrum, dataset_and_pai, spectrum_reverse };

const std::string& to_string(UnseenFactor f);
UnseenFactor unseen_factor_from_string(const std::string& s);

struct ProtocolRun {
    std::string run_id;
    UnseenFactor unseen_factor = UnseenFactor::pai;
    std::vector<std::string> train_ids;
    std::vector<std::string> val_ids;
    std::vector<std::string> test_ids;
    // Set when the test partition lacks one label; such runs are emitted so
    // the data problem is visible, and the metrics stage will reject them.
    bool degenerate = false;
};

struct SplitResult {
    std::vector<std::string> train_ids;
    std::vector<std::string> val_ids;
    // Labels with fewer than 5 samples go entirely to train and are listed here.
    std::vector<Label> unsplit_labels;
};

struct IdWithLabel {
    std::string sample_id;
    Label label = Label::bonafide;
};

// Deterministic class-stratified 80/20 split: per label, ids are sorted,
// shuffled by a stream keyed on (seed, label), and the last round(n/5) of
// the shuffled order go to validation.
SplitResult split_train_val(const std::vector<IdWithLabel>& ids, std::int64_t seed);

// Hold out one PAI: the test set is every attack of held_pai plus the
// bonafide samples of each dataset contributing that PAI; the rest of the
// NIR pool is split 80/20.
ProtocolRun generate_p1(const std::vector<SampleRecord>& records, PaiCategory held_pai, std::int64_t seed);

// Hold out one dataset, both labels.
ProtocolRun generate_p2(const std::vector<SampleRecord>& records, const std::string& held_dataset,
                        std::int64_t seed);

// Train/validate on NIR, test on all VIS.
ProtocolRun generate_p3(const std::vector<SampleRecord>& records, std::int64_t seed);

// Hold out a dataset and a PAI jointly: training excludes the dataset
// entirely and the PAI everywhere; the test set is the held dataset's
// bonafide plus its attacks of the held PAI.
ProtocolRun generate_p4(const std::vector<SampleRecord>& records, const std::string& held_dataset,
                        PaiCategory held_pai, std::int64_t seed);

// Train/validate on VIS, test on all NIR.
ProtocolRun generate_reverse_spectral(const std::vector<SampleRecord>& records, std::int64_t seed);

// Every P1 run whose holdout exists in the manifest, in fixed PAI order
// {textured_lens, paper_print, diseased, synthetic}.
std::vector<ProtocolRun> generate_all_p1(const std::vector<SampleRecord>& records, std::int64_t seed);

// One P2 run per NIR dataset that carries both labels, in lexicographic
// dataset order. One-class datasets are skipped by the enumeration;
// requesting one explicitly through generate_p2 yields the flagged
// degenerate run instead.
std::vector<ProtocolRun> generate_all_p2(const std::vector<SampleRecord>& records, std::int64_t seed);

// JSON object {run_id, unseen_factor, train, val, test} with an extra
// "degenerate": true field on flagged runs.
std::string run_to_json(const ProtocolRun& run);
ProtocolRun run_from_json_text(const std::string& text);

// runs.json: array of run objects.
std::string runs_to_json(const std::vector<ProtocolRun>& runs);
std::vector<ProtocolRun> runs_from_json_text(const std::string& text);
std::vector<ProtocolRun> load_runs(const std::string& path);

}  // namespace padeval
