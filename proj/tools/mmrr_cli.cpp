#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmrr/cases.hpp"
#include "mmrr/metrics.hpp"
#include "mmrr/report.hpp"

namespace {

using namespace mmrr;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

WorkloadFormat detect_format(const std::string& path) {
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? WorkloadFormat::Json
                                                                       : WorkloadFormat::Csv;
}

ProcessSet load_workload(const std::string& path) {
    return parse_workload(read_file(path), detect_format(path));
}

ValueRange parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        throw std::invalid_argument("range must be lo:hi, got '" + text + "'");
    }
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be lo:hi with integers, got '" + text + "'");
    }
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

struct SharedFlags {
    std::string policy = "mmrr";
    Tick tq = 20;
    Tick floor = 25;
    std::string arrival_mode = "standard";

    SimConfig config(const std::string& policy_name) const {
        return {policy_from_string(policy_name), tq, floor,
                arrival_mode_from_string(arrival_mode)};
    }
};

void add_shared_flags(CLI::App* cmd, SharedFlags& flags, bool with_policy) {
    if (with_policy) {
        cmd->add_option("--policy", flags.policy, "Scheduling policy")
            ->check(CLI::IsMember({"rr", "mmrr", "fcfs", "sjf"}));
    }
    cmd->add_option("--tq", flags.tq, "Static time quantum (rr)")->check(CLI::PositiveNumber);
    cmd->add_option("--floor", flags.floor, "Adaptive quantum floor (mmrr)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--arrival-mode", flags.arrival_mode,
                    "standard gates on true arrivals; paper_faithful queues everything at t=0")
        ->check(CLI::IsMember({"standard", "paper_faithful"}));
}

std::string repro_text(const ReproReport& report) {
    std::ostringstream out;
    std::string current_case;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t note = 0;
    for (const auto& line : report.lines) {
        if (line.case_name != current_case) {
            current_case = line.case_name;
            out << "== " << current_case << "\n";
        }
        const char* tag = line.status == ReproStatus::Pass   ? "PASS"
                          : line.status == ReproStatus::Fail ? "FAIL"
                                                             : "NOTE";
        (line.status == ReproStatus::Pass   ? pass
         : line.status == ReproStatus::Fail ? fail
                                            : note)++;
        out << "  [" << tag << "] " << line.algorithm << " " << line.metric << ": computed "
            << line.computed << ", expected " << line.expected << " ("
            << provenance_label(line.prov) << ")";
        if (!line.note.empty()) out << "\n         " << line.note;
        out << "\n";
    }
    out << (report.ok ? "OK" : "FAILED") << ": " << pass << " pass, " << fail << " fail, " << note
        << " note\n";
    return out.str();
}

std::string repro_json(const ReproReport& report) {
    nlohmann::json doc;
    doc["ok"] = report.ok;
    doc["checks"] = nlohmann::json::array();
    for (const auto& line : report.lines) {
        nlohmann::json item{{"case", line.case_name},     {"algorithm", line.algorithm},
                            {"metric", line.metric},      {"computed", line.computed},
                            {"expected", line.expected},  {"provenance", provenance_label(line.prov)},
                            {"status", line.status == ReproStatus::Pass   ? "pass"
                                       : line.status == ReproStatus::Fail ? "fail"
                                                                          : "note"}};
        if (!line.note.empty()) item["note"] = line.note;
        doc["checks"].push_back(item);
    }
    return doc.dump(2) + "\n";
}

int cmd_simulate(const std::string& path, const SharedFlags& flags, const std::string& gantt,
                 const std::string& metrics_format, bool merge_adjacent,
                 const std::string& out_path) {
    const ProcessSet set = load_workload(path);
    const Schedule schedule = run_simulation(set, flags.config(flags.policy));
    const MetricsReport metrics = aggregate(schedule);

    const std::string chart = gantt == "svg" ? render_gantt_svg(schedule)
                                             : render_gantt_ascii(schedule, merge_adjacent);
    const std::string metrics_text =
        metrics_format == "json" ? metrics_to_json(metrics) : render_metrics_text(metrics);

    if (!out_path.empty()) {
        write_output(chart, out_path);
        std::cout << metrics_text;
    } else {
        std::cout << chart << "\n" << metrics_text;
    }
    return 0;
}

int cmd_compare(const std::string& path, const std::vector<std::string>& policies,
                const SharedFlags& flags, const std::string& format,
                const std::string& out_path) {
    if (policies.size() < 2) {
        throw CLI::ValidationError("--policies", "compare needs at least two policies");
    }
    const ProcessSet set = load_workload(path);
    std::vector<ComparisonRow> rows;
    for (const auto& name : policies) {
        const MetricsReport m = aggregate(run_simulation(set, flags.config(name)));
        rows.push_back({upper(name), m.quantum_trace, m.avg_turnaround, m.avg_waiting,
                        m.context_switches});
    }
    write_output(render_comparison_table(rows, table_format_from_string(format)), out_path);
    return 0;
}

int cmd_reproduce(const std::string& case_name, const std::string& format,
                  const std::string& out_path) {
    const ReproReport report = reproduce_cases({case_name});
    write_output(format == "json" ? repro_json(report) : repro_text(report), out_path);
    return report.ok ? 0 : 1;
}

int cmd_generate(std::size_t n, std::uint64_t seed, const std::string& burst_range,
                 const std::string& arrival_range, const std::string& format,
                 const std::string& out_path) {
    const ProcessSet set =
        generate_random_workload(n, seed, parse_range(burst_range), parse_range(arrival_range));
    write_output(serialize_workload(
                     set, format == "json" ? WorkloadFormat::Json : WorkloadFormat::Csv),
                 out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Round-robin scheduling simulator with a min-max adaptive time quantum"};
    app.require_subcommand(1);

    std::string path;
    std::string out_path;
    SharedFlags flags;
    std::string gantt = "ascii";
    std::string metrics_format = "text";
    bool merge_adjacent = false;

    auto* simulate = app.add_subcommand("simulate", "Run one policy over a workload file");
    simulate->add_option("workload", path, "Workload file (.csv or .json)")
        ->required()
        ->check(CLI::ExistingFile);
    add_shared_flags(simulate, flags, true);
    simulate->add_option("--gantt", gantt, "Gantt rendering")
        ->check(CLI::IsMember({"ascii", "svg"}));
    simulate->add_option("--metrics", metrics_format, "Metrics rendering")
        ->check(CLI::IsMember({"text", "json"}));
    simulate->add_flag("--merge-adjacent", merge_adjacent,
                       "Merge consecutive same-process bars (display only)");
    simulate->add_option("--out", out_path, "Write the chart here instead of stdout");

    std::string policies_csv;
    std::string table_format = "text";
    auto* compare = app.add_subcommand("compare", "Run several policies and tabulate the metrics");
    compare->add_option("workload", path, "Workload file (.csv or .json)")
        ->required()
        ->check(CLI::ExistingFile);
    compare->add_option("--policies", policies_csv, "Comma-separated list, e.g. rr,mmrr")
        ->required();
    add_shared_flags(compare, flags, false);
    compare->add_option("--format", table_format, "Table format")
        ->check(CLI::IsMember({"text", "csv", "json", "markdown"}));
    compare->add_option("--out", out_path, "Write the table here instead of stdout");

    std::string case_name = "all";
    std::string repro_format = "text";
    auto* reproduce = app.add_subcommand("reproduce",
                                         "Re-run the built-in reference cases and check the "
                                         "recorded expectations");
    reproduce->add_option("--case", case_name, "Which case to run")
        ->check(CLI::IsMember({"all", "illustration", "case1", "case3", "case4", "case5"}));
    reproduce->add_option("--format", repro_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    reproduce->add_option("--out", out_path, "Write the report here instead of stdout");

    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string burst_range = "1:200";
    std::string arrival_range = "0:50";
    std::string workload_format = "csv";
    auto* generate = app.add_subcommand("generate", "Emit a seeded random workload");
    generate->add_option("--n", n, "Number of processes")->required()->check(CLI::PositiveNumber);
    generate->add_option("--seed", seed, "Generator seed");
    generate->add_option("--burst-range", burst_range, "Inclusive burst range lo:hi");
    generate->add_option("--arrival-range", arrival_range, "Inclusive arrival range lo:hi");
    generate->add_option("--format", workload_format, "Workload format")
        ->check(CLI::IsMember({"csv", "json"}));
    generate->add_option("--out", out_path, "Write the workload here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            return cmd_simulate(path, flags, gantt, metrics_format, merge_adjacent, out_path);
        }
        if (compare->parsed()) {
            std::vector<std::string> policies;
            std::istringstream in(policies_csv);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (!item.empty()) policies.push_back(item);
            }
            return cmd_compare(path, policies, flags, table_format, out_path);
        }
        if (reproduce->parsed()) return cmd_reproduce(case_name, repro_format, out_path);
        if (generate->parsed()) {
            return cmd_generate(n, seed, burst_range, arrival_range, workload_format, out_path);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
