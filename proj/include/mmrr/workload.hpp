#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmrr {

using Tick = std::int64_t;

/// Input text could not be decoded (bad syntax, bad field). Messages name
/// the offending line where applicable.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decoded values violate the process model (duplicate pid, burst < 1, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One schedulable task. burst >= 1, arrival >= 0, pid nonempty and free of
/// CSV-hostile characters (commas, quotes, whitespace, control chars).
struct Process {
    std::string pid;
    Tick arrival = 0;
    Tick burst = 0;

    bool operator==(const Process&) const = default;
};

/// Ordered, validated collection of processes. Input order is preserved and
/// meaningful: it is the scheduling tie-breaker of last resort.
class ProcessSet {
public:
    ProcessSet() = default;
    explicit ProcessSet(std::vector<Process> processes);

    const std::vector<Process>& processes() const { return processes_; }
    std::size_t size() const { return processes_.size(); }
    bool empty() const { return processes_.empty(); }
    const Process& operator[](std::size_t i) const { return processes_[i]; }
    auto begin() const { return processes_.begin(); }
    auto end() const { return processes_.end(); }

    bool operator==(const ProcessSet&) const = default;

private:
    std::vector<Process> processes_;
};

enum class WorkloadFormat { Csv, Json };

/// CSV requires the exact header "pid,arrival,burst"; JSON is an array of
/// {"pid", "arrival", "burst"} objects. Row order becomes input order.
ProcessSet parse_workload(const std::string& text, WorkloadFormat format);

std::string serialize_workload(const ProcessSet& set, WorkloadFormat format);

struct ValueRange {
    Tick lo = 0;
    Tick hi = 0;
};

/// Deterministic function of its arguments. Pids are "P1".."Pn"; arrival and
/// burst are drawn uniformly over the inclusive ranges from a SplitMix64
/// stream seeded with `seed` (per process: arrival first, then burst, each
/// mapped as lo + next() % span). The generator is fixed so any
/// implementation of SplitMix64 reproduces the same workloads.
ProcessSet generate_random_workload(std::size_t n, std::uint64_t seed, ValueRange burst_range,
                                    ValueRange arrival_range);

}  // namespace mmrr
