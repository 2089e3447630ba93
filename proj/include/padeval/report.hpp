#pragma once

#include <optional>
#include <string>
#include <vector>

namespace padeval {

enum class ReportFormat { csv, markdown };

// Whether a smaller or larger value wins the per-column bold marker.
enum class BestDirection { lower, higher };

// Direction and render scale for a metric name. Error rates are carried as
// fractions and scaled by 100 for display; SRD/DDP are already percentages.
struct MetricStyle {
    BestDirection direction = BestDirection::lower;
    double render_scale = 100.0;
};
MetricStyle metric_style(const std::string& metric);

struct ReportCell {
    double mean = 0.0;        // fraction or percent per the row's metric style
    double half_width = 0.0;  // same unit as mean
    bool best = false;
};

struct ReportRow {
    std::string row_label;  // model/variant/source tag
    std::string metric;
    std::vector<std::optional<ReportCell>> cells;  // one per column
};

struct ReportTable {
    std::vector<std::string> columns;  // condition / run labels
    std::vector<ReportRow> rows;
};

// "MM.MM±HH.HH", two decimals, no spaces. Inputs are display-scale values.
std::string format_cell(double mean, double half_width);

// Marks the winning cell of every (metric, column) group, first row wins
// ties. Direction comes from metric_style.
void mark_best_cells(ReportTable& table);

// Deterministic emission in the table's row/column order; Markdown bolds
// best cells.
std::string emit_table(const ReportTable& table, ReportFormat format);

// Builds a table from per-run result JSON files (row, condition, metrics)
// in the given order; first-seen order defines rows and columns.
ReportTable table_from_result_files(const std::vector<std::string>& paths);

}  // namespace padeval
