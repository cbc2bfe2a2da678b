#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmrr/cases.hpp"
#include "mmrr/metrics.hpp"
#include "mmrr/report.hpp"

namespace py = pybind11;
using namespace mmrr;

namespace {

WorkloadFormat workload_format(const std::string& name) {
    if (name == "csv") return WorkloadFormat::Csv;
    if (name == "json") return WorkloadFormat::Json;
    throw std::invalid_argument("unknown workload format '" + name + "' (expected csv, json)");
}

std::string status_label(ReproStatus s) {
    switch (s) {
        case ReproStatus::Pass: return "pass";
        case ReproStatus::Fail: return "fail";
        case ReproStatus::Note: return "note";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Round-robin scheduling simulator with a min-max adaptive time quantum";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::enum_<Policy>(m, "Policy")
        .value("RR", Policy::Rr)
        .value("MMRR", Policy::Mmrr)
        .value("FCFS", Policy::Fcfs)
        .value("SJF", Policy::Sjf);

    py::enum_<ArrivalMode>(m, "ArrivalMode")
        .value("STANDARD", ArrivalMode::Standard)
        .value("PAPER_FAITHFUL", ArrivalMode::PaperFaithful);

    py::class_<Process>(m, "Process")
        .def(py::init<std::string, Tick, Tick>(), py::arg("pid"), py::arg("arrival"),
             py::arg("burst"))
        .def_readonly("pid", &Process::pid)
        .def_readonly("arrival", &Process::arrival)
        .def_readonly("burst", &Process::burst)
        .def("__eq__", [](const Process& a, const Process& b) { return a == b; })
        .def("__repr__", [](const Process& p) {
            return "Process(pid='" + p.pid + "', arrival=" + std::to_string(p.arrival) +
                   ", burst=" + std::to_string(p.burst) + ")";
        });

    py::class_<ProcessSet>(m, "ProcessSet")
        .def(py::init<std::vector<Process>>(), py::arg("processes"))
        .def("__len__", &ProcessSet::size)
        .def("__getitem__",
             [](const ProcessSet& s, std::size_t i) {
                 if (i >= s.size()) throw py::index_error();
                 return s[i];
             })
        .def("__eq__", [](const ProcessSet& a, const ProcessSet& b) { return a == b; })
        .def("__iter__",
             [](const ProcessSet& s) { return py::make_iterator(s.begin(), s.end()); },
             py::keep_alive<0, 1>());

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](Policy policy, Tick static_quantum, Tick quantum_floor,
                         ArrivalMode arrival_mode) {
                 return SimConfig{policy, static_quantum, quantum_floor, arrival_mode};
             }),
             py::arg("policy") = Policy::Mmrr, py::arg("static_quantum") = 20,
             py::arg("quantum_floor") = 25, py::arg("arrival_mode") = ArrivalMode::Standard)
        .def_readwrite("policy", &SimConfig::policy)
        .def_readwrite("static_quantum", &SimConfig::static_quantum)
        .def_readwrite("quantum_floor", &SimConfig::quantum_floor)
        .def_readwrite("arrival_mode", &SimConfig::arrival_mode);

    py::class_<Slice>(m, "Slice")
        .def_readonly("pid", &Slice::pid)
        .def_readonly("start", &Slice::start)
        .def_readonly("end", &Slice::end)
        .def("__eq__", [](const Slice& a, const Slice& b) { return a == b; })
        .def("__repr__", [](const Slice& s) {
            return "Slice('" + s.pid + "', " + std::to_string(s.start) + ", " +
                   std::to_string(s.end) + ")";
        });

    py::class_<RoundRecord>(m, "RoundRecord")
        .def_readonly("raw", &RoundRecord::raw)
        .def_readonly("effective", &RoundRecord::effective)
        .def_readonly("dispatches", &RoundRecord::dispatches);

    py::class_<Schedule>(m, "Schedule")
        .def_readonly("slices", &Schedule::slices)
        .def_readonly("finish", &Schedule::finish)
        .def_readonly("quantum_trace", &Schedule::quantum_trace)
        .def_readonly("rounds", &Schedule::rounds)
        .def_readonly("workload", &Schedule::workload)
        .def_readonly("config", &Schedule::config)
        .def("to_json", &schedule_to_json);

    py::class_<Rational>(m, "Rational")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::str)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });

    py::class_<ProcessMetrics>(m, "ProcessMetrics")
        .def_readonly("turnaround", &ProcessMetrics::turnaround)
        .def_readonly("waiting", &ProcessMetrics::waiting)
        .def_readonly("finish", &ProcessMetrics::finish);

    py::class_<MetricsReport>(m, "MetricsReport")
        .def_readonly("per_process", &MetricsReport::per_process)
        .def_readonly("avg_turnaround", &MetricsReport::avg_turnaround)
        .def_readonly("avg_waiting", &MetricsReport::avg_waiting)
        .def_readonly("context_switches", &MetricsReport::context_switches)
        .def_readonly("quantum_trace", &MetricsReport::quantum_trace)
        .def("to_json", &metrics_to_json);

    py::class_<QuantumDecision>(m, "QuantumDecision")
        .def_readonly("raw", &QuantumDecision::raw)
        .def_readonly("effective", &QuantumDecision::effective);

    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def(py::init([](std::string algorithm, std::vector<Tick> trace, Rational att,
                         Rational awt, std::size_t cs) {
                 return ComparisonRow{std::move(algorithm), std::move(trace), att, awt, cs};
             }),
             py::arg("algorithm"), py::arg("quantum_trace"), py::arg("att"), py::arg("awt"),
             py::arg("cs"))
        .def_readonly("algorithm", &ComparisonRow::algorithm)
        .def_readonly("quantum_trace", &ComparisonRow::quantum_trace)
        .def_readonly("att", &ComparisonRow::att)
        .def_readonly("awt", &ComparisonRow::awt)
        .def_readonly("cs", &ComparisonRow::cs);

    py::class_<ReferenceCase>(m, "ReferenceCase")
        .def_readonly("name", &ReferenceCase::name)
        .def_readonly("description", &ReferenceCase::description)
        .def_readonly("workload", &ReferenceCase::workload);

    py::class_<ReproLine>(m, "ReproLine")
        .def_readonly("case_name", &ReproLine::case_name)
        .def_readonly("algorithm", &ReproLine::algorithm)
        .def_readonly("metric", &ReproLine::metric)
        .def_readonly("computed", &ReproLine::computed)
        .def_readonly("expected", &ReproLine::expected)
        .def_readonly("note", &ReproLine::note)
        .def_property_readonly("status",
                               [](const ReproLine& l) { return status_label(l.status); });

    py::class_<ReproReport>(m, "ReproReport")
        .def_readonly("lines", &ReproReport::lines)
        .def_readonly("ok", &ReproReport::ok);

    m.def("parse_workload",
          [](const std::string& text, const std::string& format) {
              return parse_workload(text, workload_format(format));
          },
          py::arg("text"), py::arg("format") = "csv");
    m.def("serialize_workload",
          [](const ProcessSet& set, const std::string& format) {
              return serialize_workload(set, workload_format(format));
          },
          py::arg("set"), py::arg("format") = "csv");
    m.def("generate_random_workload",
          [](std::size_t n, std::uint64_t seed, std::pair<Tick, Tick> burst_range,
             std::pair<Tick, Tick> arrival_range) {
              return generate_random_workload(n, seed, {burst_range.first, burst_range.second},
                                              {arrival_range.first, arrival_range.second});
          },
          py::arg("n"), py::arg("seed"), py::arg("burst_range") = std::pair<Tick, Tick>{1, 200},
          py::arg("arrival_range") = std::pair<Tick, Tick>{0, 50});

    m.def("run_simulation", &run_simulation, py::arg("set"), py::arg("config") = SimConfig{});
    m.def("tick_oracle_simulate", &tick_oracle_simulate, py::arg("set"),
          py::arg("config") = SimConfig{});
    m.def("compute_min_max_quantum",
          [](const std::vector<Tick>& remaining, Tick floor) {
              return compute_min_max_quantum(remaining, floor);
          },
          py::arg("remaining"), py::arg("quantum_floor") = 25);

    m.def("per_process_turnaround", &per_process_turnaround);
    m.def("per_process_waiting", &per_process_waiting);
    m.def("count_context_switches", &count_context_switches);
    m.def("aggregate", &aggregate);

    m.def("render_gantt_ascii", &render_gantt_ascii, py::arg("schedule"),
          py::arg("merge_adjacent") = false);
    m.def("render_gantt_svg", &render_gantt_svg);
    m.def("render_comparison_table",
          [](const std::vector<ComparisonRow>& rows, const std::string& format) {
              return render_comparison_table(rows, table_format_from_string(format));
          },
          py::arg("rows"), py::arg("format") = "text");
    m.def("export_plot_data",
          [](const std::vector<std::pair<std::string, std::vector<ComparisonRow>>>& cases) {
              std::vector<CaseRows> converted;
              converted.reserve(cases.size());
              for (const auto& [name, rows] : cases) converted.push_back({name, rows});
              return export_plot_data(converted);
          },
          py::arg("cases"));

    m.def("builtin_cases", &builtin_cases);
    m.def("reproduce_cases", &reproduce_cases,
          py::arg("names") = std::vector<std::string>{"all"});
}
