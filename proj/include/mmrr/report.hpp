#pragma once

#include <string>
#include <vector>

#include "mmrr/engine.hpp"
#include "mmrr/metrics.hpp"
#include "mmrr/rational.hpp"

namespace mmrr {

/// One line of the side-by-side policy comparison, mirroring the column
/// layout Algorithm / Time Quantum / Turnaround Time / Waiting Time /
/// Context Switch.
struct ComparisonRow {
    std::string algorithm;
    std::vector<Tick> quantum_trace;
    Rational att;
    Rational awt;
    std::size_t cs = 0;

    bool operator==(const ComparisonRow&) const = default;
};

enum class TableFormat { Text, Csv, Json, Markdown };

TableFormat table_format_from_string(const std::string& name);

/// Two-line timeline: bars |pid| over a row of boundary tick labels. Idle
/// gaps render as "-" bars. merge_adjacent collapses consecutive same-pid
/// slices for display only.
std::string render_gantt_ascii(const Schedule& schedule, bool merge_adjacent = false);

/// Deterministic SVG 1.1 document with exactly one rect per slice, x
/// proportional to start and width proportional to duration.
std::string render_gantt_svg(const Schedule& schedule);

std::string render_comparison_table(const std::vector<ComparisonRow>& rows, TableFormat format);

/// Inverses of the csv/json table renderings.
std::vector<ComparisonRow> parse_comparison_csv(const std::string& text);
std::vector<ComparisonRow> parse_comparison_json(const std::string& text);

struct CaseRows {
    std::string case_name;
    std::vector<ComparisonRow> rows;
};

/// Long-format "case,algorithm,metric,value" records (ATT, AWT, CS per row),
/// ready for any plotting tool.
std::string export_plot_data(const std::vector<CaseRows>& cases);

std::string render_metrics_text(const MetricsReport& report);

std::string join_trace(const std::vector<Tick>& trace);

}  // namespace mmrr
