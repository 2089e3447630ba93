#include "padeval/protocol.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "padeval/error.hpp"
#include "padeval/rng.hpp"

namespace padeval {

namespace {

const std::array<std::string, 5> kFactorNames = {"pai", "dataset", "spectrum", "dataset_and_pai",
                                                 "spectrum_reverse"};

std::vector<const SampleRecord*> spectrum_pool(const std::vector<SampleRecord>& records, Spectrum s) {
    std::vector<const SampleRecord*> out;
    for (const auto& r : records)
        if (r.spectrum == s) out.push_back(&r);
    return out;
}

std::vector<IdWithLabel> to_ids(const std::vector<const SampleRecord*>& pool) {
    std::vector<IdWithLabel> out;
    out.reserve(pool.size());
    for (const auto* r : pool) out.push_back({r->sample_id, r->label});
    return out;
}

bool has_both_labels(const std::vector<const SampleRecord*>& pool) {
    bool bf = false;
    bool at = false;
    for (const auto* r : pool) {
        (r->label == Label::bonafide ? bf : at) = true;
        if (bf && at) return true;
    }
    return false;
}

void require_two_class_train(const std::vector<const SampleRecord*>& pool, const std::string& run_id) {
    if (!has_both_labels(pool))
        throw OneClassTrainError("run " + run_id + ": training pool lacks one label, run rejected");
}

// Assembles a run from an already-partitioned train pool and test pool.
ProtocolRun finish_run(std::string run_id, UnseenFactor factor,
                       const std::vector<const SampleRecord*>& train_pool,
                       const std::vector<const SampleRecord*>& test_pool, std::int64_t seed) {
    ProtocolRun run;
    run.run_id = std::move(run_id);
    run.unseen_factor = factor;
    run.degenerate = !has_both_labels(test_pool);
    for (const auto* r : test_pool) run.test_ids.push_back(r->sample_id);
    auto split = split_train_val(to_ids(train_pool), seed);
    run.train_ids = std::move(split.train_ids);
    run.val_ids = std::move(split.val_ids);
    return run;
}

}  // namespace

const std::string& to_string(UnseenFactor f) { return kFactorNames[static_cast<int>(f)]; }

UnseenFactor unseen_factor_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kFactorNames.size(); ++i)
        if (s == kFactorNames[i]) return static_cast<UnseenFactor>(i);
    throw InvalidEnumError("unknown unseen_factor '" + s + "'");
}

SplitResult split_train_val(const std::vector<IdWithLabel>& ids, std::int64_t seed) {
    SplitResult res;
    for (const Label label : {Label::bonafide, Label::attack}) {
        std::vector<std::string> pool;
        for (const auto& e : ids)
            if (e.label == label) pool.push_back(e.sample_id);
        if (pool.empty()) continue;

        std::sort(pool.begin(), pool.end());
        if (pool.size() < 5) {
            res.unsplit_labels.push_back(label);
            res.train_ids.insert(res.train_ids.end(), pool.begin(), pool.end());
            continue;
        }
        rng::shuffle(pool, static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(label));
        // round(n/5) in integer arithmetic; n/5 never lands on an exact half
        const std::size_t n_val = (2 * pool.size() + 5) / 10;
        const std::size_t n_train = pool.size() - n_val;
        res.train_ids.insert(res.train_ids.end(), pool.begin(), pool.begin() + static_cast<long>(n_train));
        res.val_ids.insert(res.val_ids.end(), pool.begin() + static_cast<long>(n_train), pool.end());
    }
    return res;
}

ProtocolRun generate_p1(const std::vector<SampleRecord>& records, PaiCategory held_pai, std::int64_t seed) {
    if (held_pai == PaiCategory::none)
        throw ValidationError("held_pai must name an attack category, not 'none'");
    const auto nir = spectrum_pool(records, Spectrum::nir);

    std::set<std::string> contributing;
    for (const auto* r : nir)
        if (r->pai_category == held_pai) contributing.insert(r->dataset);
    if (contributing.empty())
        throw EmptyHoldoutError("no NIR samples with pai_category " + to_string(held_pai));

    std::vector<const SampleRecord*> test_pool, train_pool;
    bool any_bonafide = false;
    for (const auto* r : nir) {
        const bool held_attack = r->pai_category == held_pai;
        const bool matched_bonafide = r->label == Label::bonafide && contributing.contains(r->dataset);
        if (held_attack || matched_bonafide) {
            test_pool.push_back(r);
            any_bonafide |= matched_bonafide;
        } else {
            train_pool.push_back(r);
        }
    }
    if (!any_bonafide)
        throw MissingBonafideError("no bonafide samples from datasets contributing " + to_string(held_pai));

    const std::string run_id = "P1/" + to_string(held_pai);
    require_two_class_train(train_pool, run_id);
    return finish_run(run_id, UnseenFactor::pai, train_pool, test_pool, seed);
}

ProtocolRun generate_p2(const std::vector<SampleRecord>& records, const std::string& held_dataset,
                        std::int64_t seed) {
    const auto nir = spectrum_pool(records, Spectrum::nir);
    std::vector<const SampleRecord*> test_pool, train_pool;
    for (const auto* r : nir) (r->dataset == held_dataset ? test_pool : train_pool).push_back(r);
    if (test_pool.empty()) throw UnknownDatasetError("no NIR samples from dataset '" + held_dataset + "'");

    const std::string run_id = "P2/" + held_dataset;
    require_two_class_train(train_pool, run_id);
    return finish_run(run_id, UnseenFactor::dataset, train_pool, test_pool, seed);
}

ProtocolRun generate_p3(const std::vector<SampleRecord>& records, std::int64_t seed) {
    const auto nir = spectrum_pool(records, Spectrum::nir);
    const auto vis = spectrum_pool(records, Spectrum::vis);
    if (nir.empty()) throw MissingSpectrumError("manifest has no NIR records to train on");
    if (vis.empty()) throw MissingSpectrumError("manifest has no VIS records to test on");

    // Named after the sole VIS dataset when there is one.
    std::set<std::string> vis_datasets;
    for (const auto* r : vis) vis_datasets.insert(r->dataset);
    const std::string run_id = "P3/" + (vis_datasets.size() == 1 ? *vis_datasets.begin() : std::string("VIS"));

    require_two_class_train(nir, run_id);
    return finish_run(run_id, UnseenFactor::spectrum, nir, vis, seed);
}

ProtocolRun generate_p4(const std::vector<SampleRecord>& records, const std::string& held_dataset,
                        PaiCategory held_pai, std::int64_t seed) {
    if (held_pai == PaiCategory::none)
        throw ValidationError("held_pai must name an attack category, not 'none'");
    const auto nir = spectrum_pool(records, Spectrum::nir);

    bool dataset_seen = false;
    bool combo_seen = false;
    for (const auto* r : nir) {
        dataset_seen |= r->dataset == held_dataset;
        combo_seen |= r->dataset == held_dataset && r->pai_category == held_pai;
    }
    if (!dataset_seen) throw UnknownDatasetError("no NIR samples from dataset '" + held_dataset + "'");
    if (!combo_seen)
        throw EmptyHoldoutError("dataset '" + held_dataset + "' has no attacks of " + to_string(held_pai));

    std::vector<const SampleRecord*> test_pool, train_pool;
    for (const auto* r : nir) {
        const bool in_dataset = r->dataset == held_dataset;
        if (in_dataset && (r->label == Label::bonafide || r->pai_category == held_pai)) test_pool.push_back(r);
        if (!in_dataset && r->pai_category != held_pai) train_pool.push_back(r);
    }

    const std::string run_id = "P4/" + held_dataset + "+" + to_string(held_pai);
    require_two_class_train(train_pool, run_id);
    return finish_run(run_id, UnseenFactor::dataset_and_pai, train_pool, test_pool, seed);
}

ProtocolRun generate_reverse_spectral(const std::vector<SampleRecord>& records, std::int64_t seed) {
    const auto nir = spectrum_pool(records, Spectrum::nir);
    const auto vis = spectrum_pool(records, Spectrum::vis);
    if (vis.empty()) throw MissingSpectrumError("manifest has no VIS records to train on");
    if (nir.empty()) throw MissingSpectrumError("manifest has no NIR records to test on");

    const std::string run_id = "PR/VIS_to_NIR";
    require_two_class_train(vis, run_id);
    return finish_run(run_id, UnseenFactor::spectrum_reverse, vis, nir, seed);
}

std::vector<ProtocolRun> generate_all_p1(const std::vector<SampleRecord>& records, std::int64_t seed) {
    std::vector<ProtocolRun> runs;
    for (const PaiCategory pai :
         {PaiCategory::textured_lens, PaiCategory::paper_print, PaiCategory::diseased, PaiCategory::synthetic}) {
        bool present = false;
        for (const auto& r : records)
            present |= r.spectrum == Spectrum::nir && r.pai_category == pai;
        if (present) runs.push_back(generate_p1(records, pai, seed));
    }
    return runs;
}

std::vector<ProtocolRun> generate_all_p2(const std::vector<SampleRecord>& records, std::int64_t seed) {
    struct LabelPresence {
        bool bf = false;
        bool at = false;
    };
    std::map<std::string, LabelPresence> datasets;
    for (const auto& r : records) {
        if (r.spectrum != Spectrum::nir) continue;
        auto& p = datasets[r.dataset];
        (r.label == Label::bonafide ? p.bf : p.at) = true;
    }
    std::vector<ProtocolRun> runs;
    for (const auto& [dataset, presence] : datasets)
        if (presence.bf && presence.at) runs.push_back(generate_p2(records, dataset, seed));
    return runs;
}

namespace {

nlohmann::ordered_json run_to_ordered_json(const ProtocolRun& run) {
    nlohmann::ordered_json j;
    j["run_id"] = run.run_id;
    j["unseen_factor"] = to_string(run.unseen_factor);
    j["train"] = run.train_ids;
    j["val"] = run.val_ids;
    j["test"] = run.test_ids;
    if (run.degenerate) j["degenerate"] = true;
    return j;
}

ProtocolRun run_from_json(const nlohmann::json& j) {
    ProtocolRun run;
    run.run_id = j.at("run_id").get<std::string>();
    run.unseen_factor = unseen_factor_from_string(j.at("unseen_factor").get<std::string>());
    run.train_ids = j.at("train").get<std::vector<std::string>>();
    run.val_ids = j.at("val").get<std::vector<std::string>>();
    run.test_ids = j.at("test").get<std::vector<std::string>>();
    run.degenerate = j.value("degenerate", false);
    return run;
}

}  // namespace

std::string run_to_json(const ProtocolRun& run) { return run_to_ordered_json(run).dump(2) + "\n"; }

ProtocolRun run_from_json_text(const std::string& text) {
    try {
        return run_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad run JSON: ") + e.what());
    }
}

std::string runs_to_json(const std::vector<ProtocolRun>& runs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& run : runs) arr.push_back(run_to_ordered_json(run));
    return arr.dump(2) + "\n";
}

std::vector<ProtocolRun> runs_from_json_text(const std::string& text) {
    try {
        const auto arr = nlohmann::json::parse(text);
        std::vector<ProtocolRun> runs;
        for (const auto& j : arr) runs.push_back(run_from_json(j));
        return runs;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad runs JSON: ") + e.what());
    }
}

std::vector<ProtocolRun> load_runs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open runs file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return runs_from_json_text(text);
}

}  // namespace padeval
