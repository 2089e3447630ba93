#pragma once

// Programmatic corpus fixture with the per-dataset row counts used by the
// protocol and manifest tests: ten NIR sources plus an attacks-only
// diseased source (81,024 NIR records) and one VIS source (31,200 records).

#include <cstdio>
#include <string>
#include <vector>

#include "padeval/manifest.hpp"

namespace fixture {

inline void append_block(std::vector<padeval::SampleRecord>& out, const std::string& dataset,
                         padeval::Spectrum spectrum, padeval::Label label, padeval::PaiCategory pai,
                         std::size_t count) {
    const std::string tag = label == padeval::Label::bonafide ? "bf" : padeval::to_string(pai);
    for (std::size_t i = 0; i < count; ++i) {
        char idx[32];
        std::snprintf(idx, sizeof(idx), "%06zu", i);
        out.push_back({dataset + "/" + tag + "/" + idx, dataset, "sensor", spectrum, label, pai});
    }
}

inline std::vector<padeval::SampleRecord> nir_corpus() {
    using padeval::Label;
    using padeval::PaiCategory;
    constexpr auto kNir = padeval::Spectrum::nir;
    std::vector<padeval::SampleRecord> out;

    struct Block {
        const char* dataset;
        Label label;
        PaiCategory pai;
        std::size_t count;
    };
    const Block blocks[] = {
        {"CASIA-IrisV4", Label::bonafide, PaiCategory::none, 20000},
        {"CASIA-IrisV4", Label::attack, PaiCategory::synthetic, 10000},
        {"IIITD-CLI", Label::bonafide, PaiCategory::none, 2134},
        {"IIITD-CLI", Label::attack, PaiCategory::textured_lens, 4241},
        {"LivDet13-Clarkson", Label::bonafide, PaiCategory::none, 516},
        {"LivDet13-Clarkson", Label::attack, PaiCategory::textured_lens, 840},
        {"LivDet15-Clarkson", Label::bonafide, PaiCategory::none, 1906},
        {"LivDet15-Clarkson", Label::attack, PaiCategory::textured_lens, 2547},
        {"LivDet15-Clarkson", Label::attack, PaiCategory::paper_print, 3492},
        {"LivDet17-Clarkson", Label::bonafide, PaiCategory::none, 3954},
        {"LivDet17-Clarkson", Label::attack, PaiCategory::textured_lens, 1887},
        {"LivDet17-Clarkson", Label::attack, PaiCategory::paper_print, 2254},
        {"LivDet17-Warsaw", Label::bonafide, PaiCategory::none, 1844},
        {"LivDet17-Warsaw", Label::attack, PaiCategory::paper_print, 2669},
        {"NDCLD13", Label::bonafide, PaiCategory::none, 1700},
        {"NDCLD13", Label::attack, PaiCategory::textured_lens, 3400},
        {"NDCLD15", Label::bonafide, PaiCategory::none, 2475},
        {"NDCLD15", Label::attack, PaiCategory::textured_lens, 4825},
        {"Warsaw-Disease", Label::bonafide, PaiCategory::none, 282},
        {"Warsaw-Disease", Label::attack, PaiCategory::diseased, 1510},
        {"Disease-Eyes", Label::attack, PaiCategory::diseased, 252},
        {"Synthetic-Iris", Label::bonafide, PaiCategory::none, 4129},
        {"Synthetic-Iris", Label::attack, PaiCategory::synthetic, 4167},
    };
    for (const auto& b : blocks) append_block(out, b.dataset, kNir, b.label, b.pai, b.count);
    return out;
}

inline std::vector<padeval::SampleRecord> vis_corpus() {
    using padeval::Label;
    using padeval::PaiCategory;
    constexpr auto kVis = padeval::Spectrum::vis;
    std::vector<padeval::SampleRecord> out;
    append_block(out, "VSIA", kVis, Label::bonafide, PaiCategory::none, 5200);
    append_block(out, "VSIA", kVis, Label::attack, PaiCategory::paper_print, 5200);
    append_block(out, "VSIA", kVis, Label::attack, PaiCategory::display, 10400);
    append_block(out, "VSIA", kVis, Label::attack, PaiCategory::print_display, 10400);
    return out;
}

inline std::vector<padeval::SampleRecord> benchmark_corpus() {
    auto out = nir_corpus();
    const auto vis = vis_corpus();
    out.insert(out.end(), vis.begin(), vis.end());
    return out;
}

// Small hand-sized manifest for parser and CLI tests.
inline std::vector<padeval::SampleRecord> tiny_corpus() {
    using padeval::Label;
    using padeval::PaiCategory;
    constexpr auto kNir = padeval::Spectrum::nir;
    std::vector<padeval::SampleRecord> out;
    append_block(out, "NDCLD15", kNir, Label::bonafide, PaiCategory::none, 8);
    append_block(out, "NDCLD15", kNir, Label::attack, PaiCategory::textured_lens, 7);
    append_block(out, "IIITD-CLI", kNir, Label::bonafide, PaiCategory::none, 6);
    append_block(out, "IIITD-CLI", kNir, Label::attack, PaiCategory::paper_print, 5);
    return out;
}

}  // namespace fixture
