#pragma once

#include <map>
#include <string>
#include <vector>

#include "mmrr/engine.hpp"
#include "mmrr/rational.hpp"

namespace mmrr {

/// Schedule handed to metrics is unusable (incomplete or empty).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ProcessMetrics {
    Tick turnaround = 0;
    Tick waiting = 0;
    Tick finish = 0;

    bool operator==(const ProcessMetrics&) const = default;
};

struct MetricsReport {
    std::map<std::string, ProcessMetrics> per_process;
    Rational avg_turnaround;
    Rational avg_waiting;
    std::size_t context_switches = 0;
    std::vector<Tick> quantum_trace;
};

/// turnaround = finish - arrival, against the true arrival time regardless
/// of the arrival mode the schedule was produced under.
std::map<std::string, Tick> per_process_turnaround(const Schedule& schedule);

/// waiting = turnaround - burst. The start-minus-arrival formulation seen
/// elsewhere is inconsistent with every published table this tool
/// reproduces; see README.
std::map<std::string, Tick> per_process_waiting(const Schedule& schedule);

/// Number of slices minus one. Every dispatch counts as a slice, including
/// a process re-dispatched straight after its own quantum expiry; the final
/// completion is not counted.
std::size_t count_context_switches(const Schedule& schedule);

MetricsReport aggregate(const Schedule& schedule);

/// {"per_process": {...}, "att": "...", "awt": "...", "cs": n,
///  "quantum_trace": [...]}; averages are exact decimal strings.
std::string metrics_to_json(const MetricsReport& report);

}  // namespace mmrr
