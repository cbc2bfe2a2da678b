#include "mmrr/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mmrr {
namespace {

std::vector<Slice> display_slices(const Schedule& schedule, bool merge_adjacent) {
    std::vector<Slice> cells;
    for (const auto& s : schedule.slices) {
        if (!cells.empty() && cells.back().end < s.start) {
            cells.push_back({"-", cells.back().end, s.start});  // idle gap
        }
        if (merge_adjacent && !cells.empty() && cells.back().pid == s.pid &&
            cells.back().end == s.start) {
            cells.back().end = s.end;
        } else {
            cells.push_back(s);
        }
    }
    return cells;
}

std::string format_fixed(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << v;
    return out.str();
}

// Golden-angle hue walk; same pid index gives the same color every run.
std::string color_for(std::size_t index) {
    double h = std::fmod(static_cast<double>(index) * 0.618033988749895, 1.0);
    const double s = 0.5;
    const double v = 0.95;
    const int i = static_cast<int>(h * 6);
    const double f = h * 6 - i;
    const double p = v * (1 - s);
    const double q = v * (1 - f * s);
    const double t = v * (1 - (1 - f) * s);
    double r = 0;
    double g = 0;
    double b = 0;
    switch (i % 6) {
        case 0: r = v, g = t, b = p; break;
        case 1: r = q, g = v, b = p; break;
        case 2: r = p, g = v, b = t; break;
        case 3: r = p, g = q, b = v; break;
        case 4: r = t, g = p, b = v; break;
        case 5: r = v, g = p, b = q; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(r * 255),
                  static_cast<int>(g * 255), static_cast<int>(b * 255));
    return buf;
}

std::string csv_quote(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<Tick> parse_trace(const std::string& text) {
    std::vector<Tick> trace;
    if (text.empty() || text == "-") return trace;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) trace.push_back(std::stoll(item));
    return trace;
}

const char* const kColumns[] = {"Algorithm", "Time Quantum", "Turnaround Time", "Waiting Time",
                                "Context Switch"};

std::vector<std::array<std::string, 5>> table_cells(const std::vector<ComparisonRow>& rows) {
    std::vector<std::array<std::string, 5>> cells;
    for (const auto& r : rows) {
        const std::string trace = join_trace(r.quantum_trace);
        cells.push_back({r.algorithm, trace.empty() ? "-" : trace, r.att.str(), r.awt.str(),
                         std::to_string(r.cs)});
    }
    return cells;
}

}  // namespace

std::string join_trace(const std::vector<Tick>& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(trace[i]);
    }
    return out;
}

TableFormat table_format_from_string(const std::string& name) {
    if (name == "text") return TableFormat::Text;
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "markdown") return TableFormat::Markdown;
    throw std::invalid_argument("unknown table format '" + name + "'");
}

std::string render_gantt_ascii(const Schedule& schedule, bool merge_adjacent) {
    if (schedule.slices.empty()) throw std::invalid_argument("cannot render an empty schedule");
    const auto cells = display_slices(schedule, merge_adjacent);

    std::string bars;
    std::string labels;
    for (const auto& cell : cells) {
        const std::string start = std::to_string(cell.start);
        const std::size_t width = std::max(cell.pid.size(), start.size() + 1);
        while (labels.size() < bars.size()) labels += ' ';
        bars += '|' + cell.pid + std::string(width - cell.pid.size(), ' ');
        labels += start;
    }
    const std::string last = std::to_string(cells.back().end);
    while (labels.size() < bars.size()) labels += ' ';
    bars += '|';
    labels += last;
    return bars + "\n" + labels + "\n";
}

std::string render_gantt_svg(const Schedule& schedule) {
    if (schedule.slices.empty()) throw std::invalid_argument("cannot render an empty schedule");
    const double margin = 40;
    const double lane_height = 40;
    const double width = 800;
    const double height = 2 * margin + lane_height + 20;
    const Tick span = std::max<Tick>(schedule.slices.back().end, 1);
    const double scale = (width - 2 * margin) / static_cast<double>(span);

    std::map<std::string, std::size_t> color_index;
    for (const auto& p : schedule.workload) color_index.emplace(p.pid, color_index.size());

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    const double y = margin;
    for (const auto& s : schedule.slices) {
        const double x = margin + static_cast<double>(s.start) * scale;
        const double w = static_cast<double>(s.end - s.start) * scale;
        const auto it = color_index.find(s.pid);
        const std::string fill = it == color_index.end() ? "#cccccc" : color_for(it->second);
        out << "  <rect x=\"" << format_fixed(x) << "\" y=\"" << format_fixed(y) << "\" width=\""
            << format_fixed(w) << "\" height=\"" << format_fixed(lane_height) << "\" fill=\""
            << fill << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << format_fixed(x + w / 2) << "\" y=\""
            << format_fixed(y + lane_height / 2 + 4)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">" << s.pid
            << "</text>\n";
    }
    std::set<Tick> boundaries;
    for (const auto& s : schedule.slices) {
        boundaries.insert(s.start);
        boundaries.insert(s.end);
    }
    const double axis_y = y + lane_height;
    out << "  <line x1=\"" << format_fixed(margin) << "\" y1=\"" << format_fixed(axis_y)
        << "\" x2=\"" << format_fixed(margin + span * scale) << "\" y2=\"" << format_fixed(axis_y)
        << "\" stroke=\"black\"/>\n";
    for (Tick b : boundaries) {
        out << "  <text x=\"" << format_fixed(margin + static_cast<double>(b) * scale) << "\" y=\""
            << format_fixed(axis_y + 16)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">" << b
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_comparison_table(const std::vector<ComparisonRow>& rows, TableFormat format) {
    if (rows.empty()) throw std::invalid_argument("comparison table needs at least one row");
    const auto cells = table_cells(rows);

    switch (format) {
        case TableFormat::Csv: {
            std::string out = "algorithm,time_quantum,turnaround_time,waiting_time,context_switch\n";
            for (std::size_t r = 0; r < rows.size(); ++r) {
                out += csv_quote(rows[r].algorithm) + "," +
                       csv_quote(join_trace(rows[r].quantum_trace)) + "," + cells[r][2] + "," +
                       cells[r][3] + "," + cells[r][4] + "\n";
            }
            return out;
        }
        case TableFormat::Json: {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& r : rows) {
                doc.push_back({{"algorithm", r.algorithm},
                               {"quantum_trace", r.quantum_trace},
                               {"att", r.att.str()},
                               {"awt", r.awt.str()},
                               {"cs", r.cs}});
            }
            return doc.dump(2) + "\n";
        }
        case TableFormat::Markdown: {
            std::string out = "| Algorithm | Time Quantum | Turnaround Time | Waiting Time "
                              "| Context Switch |\n|---|---|---|---|---|\n";
            for (const auto& row : cells) {
                out += "| " + row[0] + " | " + row[1] + " | " + row[2] + " | " + row[3] + " | " +
                       row[4] + " |\n";
            }
            return out;
        }
        case TableFormat::Text: {
            std::array<std::size_t, 5> widths;
            for (std::size_t c = 0; c < 5; ++c) widths[c] = std::string(kColumns[c]).size();
            for (const auto& row : cells) {
                for (std::size_t c = 0; c < 5; ++c) widths[c] = std::max(widths[c], row[c].size());
            }
            const auto emit_line = [&](const std::array<std::string, 5>& row) {
                std::string line;
                for (std::size_t c = 0; c < 5; ++c) {
                    line += row[c];
                    if (c + 1 < 5) line += std::string(widths[c] - row[c].size() + 2, ' ');
                }
                return line + "\n";
            };
            std::string out = emit_line(
                {kColumns[0], kColumns[1], kColumns[2], kColumns[3], kColumns[4]});
            for (const auto& row : cells) out += emit_line(row);
            return out;
        }
    }
    throw std::invalid_argument("unknown table format");
}

std::vector<ComparisonRow> parse_comparison_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ComparisonRow> rows;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!saw_header) {
            saw_header = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 5) throw ParseError("comparison row needs 5 fields");
        rows.push_back({fields[0], parse_trace(fields[1]), parse_rational(fields[2]),
                        parse_rational(fields[3]), static_cast<std::size_t>(std::stoull(fields[4]))});
    }
    return rows;
}

std::vector<ComparisonRow> parse_comparison_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<ComparisonRow> rows;
    for (const auto& item : doc) {
        rows.push_back({item.at("algorithm").get<std::string>(),
                        item.at("quantum_trace").get<std::vector<Tick>>(),
                        parse_rational(item.at("att").get<std::string>()),
                        parse_rational(item.at("awt").get<std::string>()),
                        item.at("cs").get<std::size_t>()});
    }
    return rows;
}

std::string export_plot_data(const std::vector<CaseRows>& cases) {
    if (cases.empty()) throw std::invalid_argument("plot data needs at least one case");
    std::string out = "case,algorithm,metric,value\n";
    for (const auto& c : cases) {
        for (const auto& r : c.rows) {
            out += c.case_name + "," + r.algorithm + ",ATT," + r.att.str() + "\n";
            out += c.case_name + "," + r.algorithm + ",AWT," + r.awt.str() + "\n";
            out += c.case_name + "," + r.algorithm + ",CS," + std::to_string(r.cs) + "\n";
        }
    }
    return out;
}

std::string render_metrics_text(const MetricsReport& report) {
    std::size_t pid_width = 3;
    for (const auto& [pid, m] : report.per_process) pid_width = std::max(pid_width, pid.size());
    std::ostringstream out;
    out << "pid" << std::string(pid_width - 3 + 2, ' ') << "turnaround  waiting  finish\n";
    for (const auto& [pid, m] : report.per_process) {
        out << pid << std::string(pid_width - pid.size() + 2, ' ');
        std::string t = std::to_string(m.turnaround);
        std::string w = std::to_string(m.waiting);
        out << t << std::string(t.size() < 10 ? 10 - t.size() + 2 : 2, ' ');
        out << w << std::string(w.size() < 7 ? 7 - w.size() + 2 : 2, ' ');
        out << m.finish << "\n";
    }
    out << "ATT " << report.avg_turnaround.str() << "\n";
    out << "AWT " << report.avg_waiting.str() << "\n";
    out << "CS " << report.context_switches << "\n";
    if (!report.quantum_trace.empty()) {
        out << "quantum trace " << join_trace(report.quantum_trace) << "\n";
    }
    return out.str();
}

}  // namespace mmrr
