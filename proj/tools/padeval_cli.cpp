// padeval: open-set presentation-attack-detection evaluation toolkit.
//
// Subcommands: manifest validate|summarize, protocol gen, metrics,
// separability, synth scores|embeddings, report, evaluate.
// Exit codes: 0 success, 1 validation error, 2 I/O or parse failure.
// Diagnostics go to stderr; machine output goes to files or stdout.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padeval/bootstrap.hpp"
#include "padeval/error.hpp"
#include "padeval/evaluate.hpp"
#include "padeval/manifest.hpp"
#include "padeval/metrics.hpp"
#include "padeval/protocol.hpp"
#include "padeval/report.hpp"
#include "padeval/separability.hpp"
#include "padeval/synth.hpp"

namespace fs = std::filesystem;

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw padeval::IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw padeval::IoError("write to '" + path + "' failed");
}

std::string sanitize_run_id(const std::string& run_id) {
    std::string s = run_id;
    for (char& c : s)
        if (c == '/' || c == '\\') c = '_';
    return s;
}

padeval::ReportFormat format_from_flag(const std::string& s) {
    return s == "csv" ? padeval::ReportFormat::csv : padeval::ReportFormat::markdown;
}

std::optional<padeval::BootstrapConfig> bootstrap_from_flags(std::uint64_t replicates, std::int64_t seed,
                                                             double ci_percent) {
    if (replicates == 0) return std::nullopt;
    if (!(ci_percent > 0.0 && ci_percent < 100.0))
        throw padeval::ValidationError("--ci must be in (0,100) percent");
    return padeval::BootstrapConfig{replicates, ci_percent / 100.0, seed};
}

struct ManifestFlags {
    std::string path;
    bool dedupe_keep_first = false;
    bool corpus_strict = false;

    padeval::LoadOptions options() const { return {dedupe_keep_first, corpus_strict}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--manifest", path, "Manifest CSV path")->required();
        cmd->add_flag("--dedupe-keep-first", dedupe_keep_first,
                      "Keep the first record of a duplicated sample_id instead of failing");
        cmd->add_flag("--corpus-strict", corpus_strict,
                      "Enforce the VIS<->VSIA corpus convention");
    }
};

struct ProtocolGenFlags {
    ManifestFlags manifest;
    std::string protocol;
    std::string held_dataset;
    std::string held_pai;
    std::int64_t seed = 0;
    std::string out_dir;
};

struct MetricsFlags {
    std::string scores_path;
    std::vector<double> apcer_points{5.0, 10.0};
    bool bonafide_high = false;
    std::uint64_t replicates = 0;
    std::int64_t seed = 0;
    double ci_percent = 95.0;
    unsigned workers = 1;
    std::string row = "default";
    std::string condition = "default";
    std::string out_path;
};

struct SeparabilityFlags {
    std::string in_domain_path;
    std::string shifted_path;
    std::string row = "default";
    std::string condition = "default";
    std::string out_path;
};

struct SynthFlags {
    std::string spec_path;
    std::string out_path;
    std::string emb_format = "binary";
};

struct ReportFlags {
    std::string results_dir;
    std::string format = "md";
    std::string out_path;
};

struct EvaluateFlags {
    std::vector<std::string> scores_paths;
    std::vector<std::string> rows;
    std::string condition = "default";
    std::vector<double> apcer_points{5.0, 10.0};
    bool bonafide_high = false;
    std::uint64_t replicates = 1000;
    std::int64_t seed = 0;
    double ci_percent = 95.0;
    unsigned workers = 1;
    std::string format = "md";
    std::string out_dir;
};

void run_manifest_validate(const ManifestFlags& flags) {
    const auto records = padeval::load_manifest(flags.path, flags.options());
    std::cout << "valid: " << records.size() << " records\n";
}

void run_manifest_summarize(const ManifestFlags& flags, const std::string& out_path) {
    const auto records = padeval::load_manifest(flags.path, flags.options());
    const std::string csv = padeval::summary_csv(padeval::summarize(records));
    if (out_path.empty())
        std::cout << csv;
    else
        write_text_file(out_path, csv);
}

void run_protocol_gen(const ProtocolGenFlags& flags) {
    const auto records = padeval::load_manifest(flags.manifest.path, flags.manifest.options());

    std::vector<padeval::ProtocolRun> runs;
    if (flags.protocol == "1") {
        if (flags.held_pai.empty())
            runs = padeval::generate_all_p1(records, flags.seed);
        else
            runs.push_back(padeval::generate_p1(records, padeval::pai_from_string(flags.held_pai), flags.seed));
    } else if (flags.protocol == "2") {
        if (flags.held_dataset.empty())
            runs = padeval::generate_all_p2(records, flags.seed);
        else
            runs.push_back(padeval::generate_p2(records, flags.held_dataset, flags.seed));
    } else if (flags.protocol == "3") {
        runs.push_back(padeval::generate_p3(records, flags.seed));
    } else if (flags.protocol == "4") {
        if (flags.held_dataset.empty() || flags.held_pai.empty())
            throw CLI::RequiredError("--held-dataset and --held-pai (protocol 4)");
        runs.push_back(padeval::generate_p4(records, flags.held_dataset,
                                            padeval::pai_from_string(flags.held_pai), flags.seed));
    } else {  // "reverse", guarded by IsMember
        runs.push_back(padeval::generate_reverse_spectral(records, flags.seed));
    }

    fs::create_directories(flags.out_dir);
    for (const auto& run : runs)
        write_text_file((fs::path(flags.out_dir) / (sanitize_run_id(run.run_id) + ".json")).string(),
                        padeval::run_to_json(run));
    write_text_file((fs::path(flags.out_dir) / "runs.json").string(), padeval::runs_to_json(runs));
    std::cerr << "wrote " << runs.size() << " run(s) to " << flags.out_dir << "\n";
}

void run_metrics(const MetricsFlags& flags) {
    padeval::ScoreSet scores = padeval::load_scores(flags.scores_path);
    if (flags.bonafide_high) scores.direction = padeval::ScoreDirection::bonafide_high;

    const auto cfg = bootstrap_from_flags(flags.replicates, flags.seed, flags.ci_percent);
    padeval::ResultDoc doc = padeval::evaluate_scores(scores, flags.apcer_points, cfg, flags.workers);
    doc.row = flags.row;
    doc.condition = flags.condition;

    if (flags.out_path.empty())
        std::cout << padeval::result_to_json(doc);
    else
        padeval::save_result(flags.out_path, doc);
}

void run_separability(const SeparabilityFlags& flags) {
    const auto in_domain = padeval::load_embeddings(flags.in_domain_path);
    const auto shifted = padeval::load_embeddings(flags.shifted_path);
    const padeval::ShiftReport report = padeval::shift_report(in_domain, shifted);

    padeval::ResultDoc doc;
    doc.row = flags.row;
    doc.condition = flags.condition;
    doc.metrics = {{"r_in", report.r_in, std::nullopt},
                   {"r_shift", report.r_shift, std::nullopt},
                   {"srd", report.srd, std::nullopt},
                   {"ddp", report.ddp, std::nullopt}};

    if (flags.out_path.empty())
        std::cout << padeval::result_to_json(doc);
    else
        padeval::save_result(flags.out_path, doc);
}

void run_synth_scores(const SynthFlags& flags) {
    const auto spec = padeval::load_score_spec(flags.spec_path);
    padeval::save_scores(flags.out_path, padeval::gen_scores(spec));
}

void run_synth_embeddings(const SynthFlags& flags) {
    const auto spec = padeval::load_embedding_spec(flags.spec_path);
    const padeval::EmbeddingSet emb = padeval::gen_embeddings(spec);
    if (flags.emb_format == "csv")
        padeval::save_embeddings_csv(flags.out_path, emb);
    else
        padeval::save_embeddings_binary(flags.out_path, emb);
}

void run_report(const ReportFlags& flags) {
    if (!fs::is_directory(flags.results_dir))
        throw padeval::IoError("results directory '" + flags.results_dir + "' not found");
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(flags.results_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());

    padeval::ReportTable table = padeval::table_from_result_files(paths);
    padeval::mark_best_cells(table);
    write_text_file(flags.out_path, padeval::emit_table(table, format_from_flag(flags.format)));
}

void run_evaluate(const EvaluateFlags& flags) {
    if (!flags.rows.empty() && flags.rows.size() != flags.scores_paths.size())
        throw padeval::ValidationError("--rows must name every --scores file when given");

    const auto cfg = bootstrap_from_flags(flags.replicates, flags.seed, flags.ci_percent);
    const fs::path results_dir = fs::path(flags.out_dir) / "results";
    fs::create_directories(results_dir);

    std::vector<std::string> result_paths;
    for (std::size_t i = 0; i < flags.scores_paths.size(); ++i) {
        padeval::ScoreSet scores = padeval::load_scores(flags.scores_paths[i]);
        if (flags.bonafide_high) scores.direction = padeval::ScoreDirection::bonafide_high;

        padeval::ResultDoc doc = padeval::evaluate_scores(scores, flags.apcer_points, cfg, flags.workers);
        doc.row = flags.rows.empty() ? fs::path(flags.scores_paths[i]).stem().string() : flags.rows[i];
        doc.condition = flags.condition;

        char prefix[16];
        std::snprintf(prefix, sizeof(prefix), "%03zu_", i);
        const std::string path = (results_dir / (prefix + sanitize_run_id(doc.row) + ".json")).string();
        padeval::save_result(path, doc);
        result_paths.push_back(path);
    }

    padeval::ReportTable table = padeval::table_from_result_files(result_paths);
    padeval::mark_best_cells(table);
    const std::string report_name = flags.format == "csv" ? "report.csv" : "report.md";
    write_text_file((fs::path(flags.out_dir) / report_name).string(),
                    padeval::emit_table(table, format_from_flag(flags.format)));
    std::cerr << "wrote " << result_paths.size() << " result(s) and " << report_name << " to "
              << flags.out_dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Open-set presentation-attack-detection evaluation toolkit"};
    app.require_subcommand(1);

    // manifest validate | summarize
    auto* manifest_cmd = app.add_subcommand("manifest", "Validate or summarize a dataset manifest");
    manifest_cmd->require_subcommand(1);
    ManifestFlags validate_flags;
    auto* validate_cmd = manifest_cmd->add_subcommand("validate", "Parse and validate a manifest");
    validate_flags.attach(validate_cmd);
    validate_cmd->callback([&] { run_manifest_validate(validate_flags); });

    ManifestFlags summarize_flags;
    std::string summarize_out;
    auto* summarize_cmd = manifest_cmd->add_subcommand("summarize", "Per-dataset/PAI count summary CSV");
    summarize_flags.attach(summarize_cmd);
    summarize_cmd->add_option("--out", summarize_out, "Output CSV path (default stdout)");
    summarize_cmd->callback([&] { run_manifest_summarize(summarize_flags, summarize_out); });

    // protocol gen
    auto* protocol_cmd = app.add_subcommand("protocol", "Generate open-set protocol partitions");
    protocol_cmd->require_subcommand(1);
    ProtocolGenFlags gen_flags;
    auto* gen_cmd = protocol_cmd->add_subcommand("gen", "Write per-run JSON files and runs.json");
    gen_flags.manifest.attach(gen_cmd);
    gen_cmd->add_option("--protocol", gen_flags.protocol, "1|2|3|4|reverse")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "reverse"}));
    gen_cmd->add_option("--held-dataset", gen_flags.held_dataset, "Held-out dataset (protocols 2, 4)");
    gen_cmd->add_option("--held-pai", gen_flags.held_pai, "Held-out PAI category (protocols 1, 4)");
    gen_cmd->add_option("--seed", gen_flags.seed, "Split seed")->required();
    gen_cmd->add_option("--out", gen_flags.out_dir, "Output directory")->required();
    gen_cmd->callback([&] { run_protocol_gen(gen_flags); });

    // metrics
    MetricsFlags metrics_flags;
    auto* metrics_cmd = app.add_subcommand("metrics", "PAD operating-point metrics from a scores CSV");
    metrics_cmd->add_option("--scores", metrics_flags.scores_path, "Scores CSV path")->required();
    metrics_cmd->add_option("--apcer-points", metrics_flags.apcer_points,
                            "BPCER@APCER points, percent (default 5,10)")
        ->delimiter(',');
    metrics_cmd->add_flag("--bonafide-high", metrics_flags.bonafide_high,
                          "Scores increase toward bonafide instead of attack");
    metrics_cmd->add_option("--bootstrap", metrics_flags.replicates,
                            "Bootstrap replicate count (0 = no CIs)");
    metrics_cmd->add_option("--seed", metrics_flags.seed, "Bootstrap master seed");
    metrics_cmd->add_option("--ci", metrics_flags.ci_percent, "Confidence level, percent (default 95)");
    metrics_cmd->add_option("--workers", metrics_flags.workers, "Bootstrap worker threads");
    metrics_cmd->add_option("--row", metrics_flags.row, "Row label for downstream reports");
    metrics_cmd->add_option("--condition", metrics_flags.condition, "Column label for downstream reports");
    metrics_cmd->add_option("--out", metrics_flags.out_path, "Result JSON path (default stdout)");
    metrics_cmd->callback([&] { run_metrics(metrics_flags); });

    // separability
    SeparabilityFlags sep_flags;
    auto* sep_cmd = app.add_subcommand("separability", "Feature-space shift analysis of two embedding sets");
    sep_cmd->add_option("--in-domain", sep_flags.in_domain_path, "In-domain embeddings (CSV or EMB1)")
        ->required();
    sep_cmd->add_option("--shifted", sep_flags.shifted_path, "Shifted-domain embeddings (CSV or EMB1)")
        ->required();
    sep_cmd->add_option("--row", sep_flags.row, "Row label for downstream reports");
    sep_cmd->add_option("--condition", sep_flags.condition, "Column label for downstream reports");
    sep_cmd->add_option("--out", sep_flags.out_path, "Result JSON path (default stdout)");
    sep_cmd->callback([&] { run_separability(sep_flags); });

    // synth scores | embeddings
    auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic Gaussian fixtures");
    synth_cmd->require_subcommand(1);
    SynthFlags synth_scores_flags;
    auto* synth_scores_cmd = synth_cmd->add_subcommand("scores", "Two-class Gaussian scores CSV");
    synth_scores_cmd->add_option("--spec", synth_scores_flags.spec_path, "Spec JSON path")->required();
    synth_scores_cmd->add_option("--out", synth_scores_flags.out_path, "Output CSV path")->required();
    synth_scores_cmd->callback([&] { run_synth_scores(synth_scores_flags); });

    SynthFlags synth_emb_flags;
    auto* synth_emb_cmd = synth_cmd->add_subcommand("embeddings", "Two-class Gaussian embeddings");
    synth_emb_cmd->add_option("--spec", synth_emb_flags.spec_path, "Spec JSON path")->required();
    synth_emb_cmd->add_option("--out", synth_emb_flags.out_path, "Output path")->required();
    synth_emb_cmd->add_option("--format", synth_emb_flags.emb_format, "binary|csv (default binary)")
        ->check(CLI::IsMember({"binary", "csv"}));
    synth_emb_cmd->callback([&] { run_synth_embeddings(synth_emb_flags); });

    // report
    ReportFlags report_flags;
    auto* report_cmd = app.add_subcommand("report", "Assemble result JSON files into a mean±CI table");
    report_cmd->add_option("--results", report_flags.results_dir, "Directory of result JSON files")
        ->required();
    report_cmd->add_option("--format", report_flags.format, "md|csv (default md)")
        ->check(CLI::IsMember({"md", "csv"}));
    report_cmd->add_option("--out", report_flags.out_path, "Output table path")->required();
    report_cmd->callback([&] { run_report(report_flags); });

    // evaluate
    EvaluateFlags eval_flags;
    auto* eval_cmd = app.add_subcommand("evaluate", "Scores -> metrics -> bootstrap -> report pipeline");
    eval_cmd->add_option("--scores", eval_flags.scores_paths, "Scores CSV path (repeatable)")
        ->required()
        ->take_all();
    eval_cmd->add_option("--rows", eval_flags.rows, "Row label per scores file (default: file stem)")
        ->delimiter(',');
    eval_cmd->add_option("--condition", eval_flags.condition, "Column label for the report");
    eval_cmd->add_option("--apcer-points", eval_flags.apcer_points,
                         "BPCER@APCER points, percent (default 5,10)")
        ->delimiter(',');
    eval_cmd->add_flag("--bonafide-high", eval_flags.bonafide_high,
                       "Scores increase toward bonafide instead of attack");
    eval_cmd->add_option("--bootstrap", eval_flags.replicates, "Bootstrap replicate count (0 = no CIs)");
    eval_cmd->add_option("--seed", eval_flags.seed, "Bootstrap master seed");
    eval_cmd->add_option("--ci", eval_flags.ci_percent, "Confidence level, percent (default 95)");
    eval_cmd->add_option("--workers", eval_flags.workers, "Bootstrap worker threads");
    eval_cmd->add_option("--format", eval_flags.format, "md|csv (default md)")
        ->check(CLI::IsMember({"md", "csv"}));
    eval_cmd->add_option("--out-dir", eval_flags.out_dir, "Output directory")->required();
    eval_cmd->callback([&] { run_evaluate(eval_flags); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const padeval::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const padeval::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
