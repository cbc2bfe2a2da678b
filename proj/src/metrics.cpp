#include "mmrr/metrics.hpp"

#include <numeric>

#include "json.hpp"

namespace mmrr {
namespace {

void require_complete(const Schedule& schedule) {
    if (schedule.workload.empty()) throw StateError("schedule has no workload");
    std::map<std::string, Tick> executed;
    for (const auto& s : schedule.slices) executed[s.pid] += s.end - s.start;
    for (const auto& p : schedule.workload) {
        const auto it = executed.find(p.pid);
        if (it == executed.end() || it->second != p.burst || !schedule.finish.count(p.pid)) {
            throw StateError("schedule incomplete: " + p.pid + " has unfinished work");
        }
    }
}

}  // namespace

std::map<std::string, Tick> per_process_turnaround(const Schedule& schedule) {
    require_complete(schedule);
    std::map<std::string, Tick> out;
    for (const auto& p : schedule.workload) {
        out[p.pid] = schedule.finish.at(p.pid) - p.arrival;
    }
    return out;
}

std::map<std::string, Tick> per_process_waiting(const Schedule& schedule) {
    auto out = per_process_turnaround(schedule);
    for (const auto& p : schedule.workload) out[p.pid] -= p.burst;
    return out;
}

std::size_t count_context_switches(const Schedule& schedule) {
    if (schedule.slices.empty()) throw StateError("schedule has no slices");
    return schedule.slices.size() - 1;
}

MetricsReport aggregate(const Schedule& schedule) {
    MetricsReport report;
    const auto tat = per_process_turnaround(schedule);
    Tick tat_sum = 0;
    Tick wt_sum = 0;
    for (const auto& p : schedule.workload) {
        const Tick t = tat.at(p.pid);
        const Tick w = t - p.burst;
        report.per_process[p.pid] = {t, w, schedule.finish.at(p.pid)};
        tat_sum += t;
        wt_sum += w;
    }
    const auto n = static_cast<std::int64_t>(schedule.workload.size());
    report.avg_turnaround = Rational(tat_sum, n);
    report.avg_waiting = Rational(wt_sum, n);
    report.context_switches = count_context_switches(schedule);
    report.quantum_trace = schedule.quantum_trace;
    return report;
}

std::string metrics_to_json(const MetricsReport& report) {
    nlohmann::json doc;
    doc["per_process"] = nlohmann::json::object();
    for (const auto& [pid, m] : report.per_process) {
        doc["per_process"][pid] = {
            {"turnaround", m.turnaround}, {"waiting", m.waiting}, {"finish", m.finish}};
    }
    doc["att"] = report.avg_turnaround.str();
    doc["awt"] = report.avg_waiting.str();
    doc["cs"] = report.context_switches;
    doc["quantum_trace"] = report.quantum_trace;
    return doc.dump(2) + "\n";
}

}  // namespace mmrr
