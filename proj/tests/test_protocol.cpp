#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "padeval/error.hpp"
#include "padeval/protocol.hpp"

#include "fixture.hpp"
#include "helpers.hpp"

using namespace padeval;

namespace {

using RecordIndex = std::unordered_map<std::string, const SampleRecord*>;

RecordIndex index_records(const std::vector<SampleRecord>& records) {
    RecordIndex idx;
    for (const auto& r : records) idx.emplace(r.sample_id, &r);
    return idx;
}

std::unordered_set<std::string> to_set(const std::vector<std::string>& ids) {
    return {ids.begin(), ids.end()};
}

// Pairwise disjointness plus: every id resolves, and train/val/test ids are unique.
void check_partition(const ProtocolRun& run, const RecordIndex& idx) {
    std::unordered_set<std::string> seen;
    bool all_known = true;
    bool all_unique = true;
    for (const auto* ids : {&run.train_ids, &run.val_ids, &run.test_ids}) {
        for (const auto& id : *ids) {
            all_known &= idx.contains(id);
            all_unique &= seen.insert(id).second;
        }
    }
    REQUIRE(all_known);
    REQUIRE(all_unique);  // no id appears twice across train/val/test
}

// True when pred holds for every id's record.
template <typename Pred>
bool all_match(const std::vector<std::string>& ids, const RecordIndex& idx, Pred pred) {
    for (const auto& id : ids)
        if (!pred(*idx.at(id))) return false;
    return true;
}

std::size_t count_if_in(const std::vector<std::string>& ids, const RecordIndex& idx,
                        bool (*pred)(const SampleRecord&)) {
    std::size_t n = 0;
    for (const auto& id : ids) n += pred(*idx.at(id));
    return n;
}

std::vector<IdWithLabel> numbered_ids(std::size_t n_bf, std::size_t n_at) {
    std::vector<IdWithLabel> ids;
    for (std::size_t i = 0; i < n_bf; ++i) ids.push_back({"bf" + std::to_string(i), Label::bonafide});
    for (std::size_t i = 0; i < n_at; ++i) ids.push_back({"at" + std::to_string(i), Label::attack});
    return ids;
}

}  // namespace

TEST_CASE("80/20 split hits the exact per-label rounding") {
    auto val_count = [](std::size_t n, Label label) {
        std::vector<IdWithLabel> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back({"x" + std::to_string(i), label});
        const auto split = split_train_val(ids, 3);
        return split.val_ids.size();
    };
    CHECK(val_count(5, Label::bonafide) == 1);
    CHECK(val_count(6, Label::bonafide) == 1);
    CHECK(val_count(7, Label::bonafide) == 1);   // round(1.4) = 1
    CHECK(val_count(8, Label::bonafide) == 2);   // round(1.6) = 2
    CHECK(val_count(10, Label::bonafide) == 2);
    CHECK(val_count(13, Label::bonafide) == 3);  // round(2.6) = 3
    CHECK(val_count(100, Label::bonafide) == 20);

    const auto split = split_train_val(numbered_ids(100, 50), 1);
    CHECK(split.train_ids.size() == 120);  // 80 + 40
    CHECK(split.val_ids.size() == 30);     // 20 + 10
    CHECK(split.unsplit_labels.empty());
}

TEST_CASE("labels with fewer than five samples go entirely to train, flagged") {
    const auto split = split_train_val(numbered_ids(4, 12), 9);
    CHECK(split.train_ids.size() == 4 + 10);
    CHECK(split.val_ids.size() == 2);
    REQUIRE(split.unsplit_labels.size() == 1);
    CHECK(split.unsplit_labels[0] == Label::bonafide);
}

TEST_CASE("split is deterministic in the seed and blind to input order") {
    auto ids = numbered_ids(20, 15);
    const auto a = split_train_val(ids, 42);
    const auto b = split_train_val(ids, 42);
    CHECK(a.train_ids == b.train_ids);
    CHECK(a.val_ids == b.val_ids);

    std::reverse(ids.begin(), ids.end());
    const auto c = split_train_val(ids, 42);
    CHECK(a.train_ids == c.train_ids);
    CHECK(a.val_ids == c.val_ids);

    const auto d = split_train_val(ids, 43);
    CHECK(a.val_ids != d.val_ids);
}

TEST_CASE("split partitions the input exactly") {
    const auto ids = numbered_ids(23, 17);
    const auto split = split_train_val(ids, 7);
    auto all = to_set(split.train_ids);
    for (const auto& id : split.val_ids) REQUIRE(all.insert(id).second);
    CHECK(all.size() == ids.size());
}

TEST_CASE("P1 textured-lens holdout on the corpus fixture") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const auto run = generate_p1(records, PaiCategory::textured_lens, 11);

    CHECK(run.run_id == "P1/textured_lens");
    CHECK(run.unseen_factor == UnseenFactor::pai);
    CHECK_FALSE(run.degenerate);
    check_partition(run, idx);

    const auto test_attacks = count_if_in(run.test_ids, idx,
                                          [](const SampleRecord& r) { return r.label == Label::attack; });
    CHECK(test_attacks == 17740);
    // bonafide of the six datasets contributing textured lenses
    CHECK(run.test_ids.size() - test_attacks == 2134u + 516 + 1906 + 3954 + 1700 + 2475);

    for (const auto* ids : {&run.train_ids, &run.val_ids})
        CHECK(all_match(*ids, idx, [](const SampleRecord& r) {
            return r.pai_category != PaiCategory::textured_lens && r.spectrum == Spectrum::nir;
        }));

    // train pool: 26,255 bonafide and 24,344 attacks -> 5,251 + 4,869 to val
    CHECK(run.val_ids.size() == 5251u + 4869);
    CHECK(run.train_ids.size() + run.val_ids.size() + run.test_ids.size() == 81024);
}

TEST_CASE("P1 diseased holdout pairs the attacks with their source bonafide") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const auto run = generate_p1(records, PaiCategory::diseased, 1);
    // 1,762 diseased attacks + the 282 Warsaw-Disease bonafide
    CHECK(run.test_ids.size() == 1762u + 282);
    check_partition(run, idx);
}

TEST_CASE("P1 enumeration yields the four holdouts in fixed order") {
    const auto runs = generate_all_p1(fixture::benchmark_corpus(), 5);
    REQUIRE(runs.size() == 4);
    CHECK(runs[0].run_id == "P1/textured_lens");
    CHECK(runs[1].run_id == "P1/paper_print");
    CHECK(runs[2].run_id == "P1/diseased");
    CHECK(runs[3].run_id == "P1/synthetic");
}

TEST_CASE("P1 error taxonomy") {
    const auto records = fixture::benchmark_corpus();
    // display attacks exist only in the VIS corpus, so the NIR pool has none
    CHECK_THROWS_AS(generate_p1(records, PaiCategory::display, 0), EmptyHoldoutError);
    CHECK_THROWS_AS(generate_p1(records, PaiCategory::none, 0), ValidationError);

    // contributing dataset has no bonafide counterpart
    std::vector<SampleRecord> no_bf;
    fixture::append_block(no_bf, "Disease-Eyes", Spectrum::nir, Label::attack, PaiCategory::diseased, 6);
    fixture::append_block(no_bf, "NDCLD15", Spectrum::nir, Label::bonafide, PaiCategory::none, 6);
    fixture::append_block(no_bf, "NDCLD15", Spectrum::nir, Label::attack, PaiCategory::textured_lens, 6);
    CHECK_THROWS_AS(generate_p1(no_bf, PaiCategory::diseased, 0), MissingBonafideError);

    // a single PAI category leaves a one-class training pool
    std::vector<SampleRecord> single_pai;
    fixture::append_block(single_pai, "NDCLD15", Spectrum::nir, Label::bonafide, PaiCategory::none, 6);
    fixture::append_block(single_pai, "NDCLD15", Spectrum::nir, Label::attack, PaiCategory::textured_lens, 6);
    fixture::append_block(single_pai, "NDCLD13", Spectrum::nir, Label::bonafide, PaiCategory::none, 6);
    CHECK_THROWS_AS(generate_p1(single_pai, PaiCategory::textured_lens, 0), OneClassTrainError);
}

TEST_CASE("P2 holds out one dataset with both labels") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const auto run = generate_p2(records, "NDCLD15", 3);

    CHECK(run.run_id == "P2/NDCLD15");
    CHECK(run.unseen_factor == UnseenFactor::dataset);
    CHECK_FALSE(run.degenerate);
    check_partition(run, idx);
    CHECK(run.test_ids.size() == 2475u + 4825);
    const auto test_bf = count_if_in(run.test_ids, idx,
                                     [](const SampleRecord& r) { return r.label == Label::bonafide; });
    CHECK(test_bf == 2475);

    for (const auto* ids : {&run.train_ids, &run.val_ids})
        CHECK(all_match(*ids, idx, [](const SampleRecord& r) { return r.dataset != "NDCLD15"; }));
    CHECK(run.train_ids.size() + run.val_ids.size() + run.test_ids.size() == 81024);
}

TEST_CASE("P2 rejects unknown datasets and flags one-class holdouts") {
    const auto records = fixture::benchmark_corpus();
    CHECK_THROWS_AS(generate_p2(records, "VSIA", 0), UnknownDatasetError);  // VIS-only source
    CHECK_THROWS_AS(generate_p2(records, "NoSuchSet", 0), UnknownDatasetError);

    const auto run = generate_p2(records, "Disease-Eyes", 0);  // attacks only
    CHECK(run.degenerate);
    CHECK(run.test_ids.size() == 252);
}

TEST_CASE("P2 enumeration covers exactly the ten two-class NIR datasets") {
    const auto runs = generate_all_p2(fixture::benchmark_corpus(), 2);
    REQUIRE(runs.size() == 10);
    const std::vector<std::string> expected{
        "P2/CASIA-IrisV4",      "P2/IIITD-CLI",         "P2/LivDet13-Clarkson",
        "P2/LivDet15-Clarkson", "P2/LivDet17-Clarkson", "P2/LivDet17-Warsaw",
        "P2/NDCLD13",           "P2/NDCLD15",           "P2/Synthetic-Iris",
        "P2/Warsaw-Disease"};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(runs[i].run_id == expected[i]);
    for (const auto& run : runs) CHECK_FALSE(run.degenerate);
}

TEST_CASE("P3 trains on NIR and tests on the whole VIS corpus") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const auto run = generate_p3(records, 8);

    CHECK(run.run_id == "P3/VSIA");
    CHECK(run.unseen_factor == UnseenFactor::spectrum);
    check_partition(run, idx);
    CHECK(run.test_ids.size() == 31200);
    CHECK(run.train_ids.size() + run.val_ids.size() == 81024);
    CHECK(all_match(run.test_ids, idx, [](const SampleRecord& r) { return r.spectrum == Spectrum::vis; }));
    CHECK(all_match(run.train_ids, idx, [](const SampleRecord& r) { return r.spectrum == Spectrum::nir; }));

    CHECK_THROWS_AS(generate_p3(fixture::nir_corpus(), 0), MissingSpectrumError);
    CHECK_THROWS_AS(generate_p3(fixture::vis_corpus(), 0), MissingSpectrumError);
}

TEST_CASE("protocols 1-3 enumerate to the fifteen corpus runs") {
    const auto records = fixture::benchmark_corpus();
    std::vector<ProtocolRun> runs = generate_all_p1(records, 1);
    const auto p2 = generate_all_p2(records, 1);
    runs.insert(runs.end(), p2.begin(), p2.end());
    runs.push_back(generate_p3(records, 1));
    CHECK(runs.size() == 15);

    const auto idx = index_records(records);
    for (const auto& run : runs) {
        check_partition(run, idx);
        CHECK_FALSE(run.degenerate);
    }
}

TEST_CASE("P4 holds out a dataset and a PAI jointly") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const auto run = generate_p4(records, "NDCLD15", PaiCategory::textured_lens, 6);

    CHECK(run.run_id == "P4/NDCLD15+textured_lens");
    CHECK(run.unseen_factor == UnseenFactor::dataset_and_pai);
    check_partition(run, idx);
    const auto test_attacks = count_if_in(run.test_ids, idx,
                                          [](const SampleRecord& r) { return r.label == Label::attack; });
    CHECK(test_attacks == 4825);
    CHECK(run.test_ids.size() == 4825u + 2475);

    for (const auto* ids : {&run.train_ids, &run.val_ids})
        CHECK(all_match(*ids, idx, [](const SampleRecord& r) {
            return r.dataset != "NDCLD15" && r.pai_category != PaiCategory::textured_lens;
        }));
}

TEST_CASE("the four corpus dataset-PAI pairs all generate valid runs") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const std::vector<std::pair<std::string, PaiCategory>> pairs{
        {"CASIA-IrisV4", PaiCategory::synthetic},
        {"LivDet17-Clarkson", PaiCategory::paper_print},
        {"NDCLD15", PaiCategory::textured_lens},
        {"Warsaw-Disease", PaiCategory::diseased}};
    for (const auto& [dataset, pai] : pairs) {
        const auto run = generate_p4(records, dataset, pai, 4);
        CHECK_FALSE(run.degenerate);
        check_partition(run, idx);
        for (const auto* ids : {&run.train_ids, &run.val_ids})
            CHECK(all_match(*ids, idx, [&dataset, pai](const SampleRecord& r) {
                return r.dataset != dataset && r.pai_category != pai;
            }));
    }
}

TEST_CASE("P4 rejects absent combinations") {
    const auto records = fixture::benchmark_corpus();
    CHECK_THROWS_AS(generate_p4(records, "IIITD-CLI", PaiCategory::paper_print, 0), EmptyHoldoutError);
    CHECK_THROWS_AS(generate_p4(records, "NoSuchSet", PaiCategory::textured_lens, 0), UnknownDatasetError);
    CHECK_THROWS_AS(generate_p4(records, "NDCLD15", PaiCategory::none, 0), ValidationError);
}

TEST_CASE("reverse cross-spectral run swaps the spectra") {
    const auto records = fixture::benchmark_corpus();
    const auto idx = index_records(records);
    const auto run = generate_reverse_spectral(records, 9);

    CHECK(run.run_id == "PR/VIS_to_NIR");
    CHECK(run.unseen_factor == UnseenFactor::spectrum_reverse);
    check_partition(run, idx);
    CHECK(run.train_ids.size() + run.val_ids.size() == 31200);
    CHECK(run.test_ids.size() == 81024);
    CHECK(all_match(run.train_ids, idx, [](const SampleRecord& r) { return r.spectrum == Spectrum::vis; }));

    CHECK_THROWS_AS(generate_reverse_spectral(fixture::nir_corpus(), 0), MissingSpectrumError);
}

TEST_CASE("generation is deterministic in the seed") {
    const auto records = fixture::tiny_corpus();
    const auto a = generate_p2(records, "NDCLD15", 12);
    const auto b = generate_p2(records, "NDCLD15", 12);
    const auto c = generate_p2(records, "NDCLD15", 13);
    CHECK(a.train_ids == b.train_ids);
    CHECK(a.val_ids == b.val_ids);
    CHECK(a.test_ids == b.test_ids);
    CHECK(a.val_ids != c.val_ids);
}

TEST_CASE("run JSON serialization is frozen and round-trips") {
    ProtocolRun run;
    run.run_id = "P1/textured_lens";
    run.unseen_factor = UnseenFactor::pai;
    run.train_ids = {"a"};
    run.val_ids = {"b"};
    run.test_ids = {"c", "d"};

    const std::string expected =
        "{\n"
        "  \"run_id\": \"P1/textured_lens\",\n"
        "  \"unseen_factor\": \"pai\",\n"
        "  \"train\": [\n    \"a\"\n  ],\n"
        "  \"val\": [\n    \"b\"\n  ],\n"
        "  \"test\": [\n    \"c\",\n    \"d\"\n  ]\n"
        "}\n";
    CHECK(run_to_json(run) == expected);

    const auto back = run_from_json_text(run_to_json(run));
    CHECK(back.run_id == run.run_id);
    CHECK(back.unseen_factor == run.unseen_factor);
    CHECK(back.train_ids == run.train_ids);
    CHECK(back.val_ids == run.val_ids);
    CHECK(back.test_ids == run.test_ids);
    CHECK_FALSE(back.degenerate);

    run.degenerate = true;
    CHECK(run_from_json_text(run_to_json(run)).degenerate);
    CHECK_THROWS_AS(run_from_json_text("{not json"), ParseError);

    const std::vector<ProtocolRun> runs{run, run};
    const auto list = runs_from_json_text(runs_to_json(runs));
    CHECK(list.size() == 2);
    CHECK(list[1].run_id == run.run_id);
}
