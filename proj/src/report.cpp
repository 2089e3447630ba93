#include "padeval/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "padeval/error.hpp"

namespace padeval {

MetricStyle metric_style(const std::string& metric) {
    if (metric == "ddp") return {BestDirection::higher, 1.0};
    if (metric == "srd") return {BestDirection::lower, 1.0};
    if (metric == "r" || metric == "r_in" || metric == "r_shift") return {BestDirection::higher, 1.0};
    return {BestDirection::lower, 100.0};  // d_eer, bpcer@*
}

std::string format_cell(double mean, double half_width) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f±%.2f", mean, half_width);
    return buf;
}

void mark_best_cells(ReportTable& table) {
    for (auto& row : table.rows)
        for (auto& cell : row.cells)
            if (cell) cell->best = false;

    std::map<std::string, std::vector<ReportRow*>> by_metric;
    for (auto& row : table.rows) by_metric[row.metric].push_back(&row);

    for (auto& [metric, rows] : by_metric) {
        const MetricStyle style = metric_style(metric);
        for (std::size_t col = 0; col < table.columns.size(); ++col) {
            ReportCell* best = nullptr;
            for (ReportRow* row : rows) {
                if (col >= row->cells.size() || !row->cells[col]) continue;
                auto& cell = *row->cells[col];
                const bool wins = best == nullptr || (style.direction == BestDirection::lower
                                                          ? cell.mean < best->mean
                                                          : cell.mean > best->mean);
                if (wins) best = &cell;
            }
            if (best) best->best = true;
        }
    }
}

std::string emit_table(const ReportTable& table, ReportFormat format) {
    std::ostringstream out;
    const bool md = format == ReportFormat::markdown;
    if (md) {
        out << "| row | metric |";
        for (const auto& c : table.columns) out << ' ' << c << " |";
        out << "\n|---|---|";
        for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
        out << '\n';
    } else {
        out << "row,metric";
        for (const auto& c : table.columns) out << ',' << c;
        out << '\n';
    }

    for (const auto& row : table.rows) {
        const double scale = metric_style(row.metric).render_scale;
        if (md)
            out << "| " << row.row_label << " | " << row.metric << " |";
        else
            out << row.row_label << ',' << row.metric;
        for (std::size_t col = 0; col < table.columns.size(); ++col) {
            const auto& cell = col < row.cells.size() ? row.cells[col] : std::optional<ReportCell>{};
            std::string text;
            if (cell) {
                text = format_cell(cell->mean * scale, cell->half_width * scale);
                if (md && cell->best) text = "**" + text + "**";
            }
            if (md)
                out << ' ' << text << " |";
            else
                out << ',' << text;
        }
        out << '\n';
    }
    return out.str();
}

ReportTable table_from_result_files(const std::vector<std::string>& paths) {
    ReportTable table;
    std::map<std::string, std::size_t> col_index;
    std::map<std::pair<std::string, std::string>, std::size_t> row_index;

    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open results file '" + path + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("bad results JSON in '" + path + "': " + e.what());
        }

        const std::string row_label = j.value("row", "default");
        const std::string condition = j.value("condition", "default");
        auto [col_it, col_new] = col_index.try_emplace(condition, table.columns.size());
        if (col_new) table.columns.push_back(condition);
        const std::size_t col = col_it->second;

        if (!j.contains("metrics") || !j["metrics"].is_array())
            throw ParseError("results file '" + path + "' lacks a metrics array");
        for (const auto& m : j["metrics"]) {
            const std::string metric = m.at("metric").get<std::string>();
            auto [row_it, row_new] = row_index.try_emplace({row_label, metric}, table.rows.size());
            if (row_new) table.rows.push_back({row_label, metric, {}});
            auto& row = table.rows[row_it->second];
            if (row.cells.size() < table.columns.size()) row.cells.resize(table.columns.size());

            ReportCell cell;
            // bootstrap results carry mean/half_width, plain ones just a point
            cell.mean = m.contains("mean") ? m.at("mean").get<double>() : m.at("point").get<double>();
            cell.half_width = m.value("half_width", 0.0);
            row.cells[col] = cell;
        }
    }
    for (auto& row : table.rows)
        if (row.cells.size() < table.columns.size()) row.cells.resize(table.columns.size());
    mark_best_cells(table);
    return table;
}

}  // namespace padeval
