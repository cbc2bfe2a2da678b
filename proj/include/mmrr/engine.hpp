#pragma once

#include <map>
#include <string>
#include <vector>

#include "mmrr/policies.hpp"
#include "mmrr/workload.hpp"

namespace mmrr {

/// One contiguous interval of CPU occupancy. start < end; slices in a
/// Schedule are ordered and never overlap.
struct Slice {
    std::string pid;
    Tick start = 0;
    Tick end = 0;

    bool operator==(const Slice&) const = default;
};

/// Diagnostic record of one adaptive round: the quantum decision plus how
/// many dispatches the round issued (so the slice list can be split back
/// into rounds without re-running the policy).
struct RoundRecord {
    Tick raw = 0;
    Tick effective = 0;
    std::size_t dispatches = 0;

    bool operator==(const RoundRecord&) const = default;
};

struct SimConfig {
    Policy policy = Policy::Mmrr;
    Tick static_quantum = 20;    // rr only
    Tick quantum_floor = 25;     // mmrr only
    ArrivalMode arrival_mode = ArrivalMode::Standard;

    bool operator==(const SimConfig&) const = default;
};

/// Full execution record. Every dispatch produces a slice, including a
/// process re-dispatched immediately after its own quantum expiry; adjacent
/// same-pid slices are never merged here (that is a rendering choice).
struct Schedule {
    std::vector<Slice> slices;
    std::map<std::string, Tick> finish;  // pid -> end of its last slice
    std::vector<Tick> quantum_trace;     // per round for mmrr, {tq} for rr, empty for baselines
    std::vector<RoundRecord> rounds;     // mmrr only
    ProcessSet workload;
    SimConfig config;
};

/// Event-driven simulation of one policy over one workload on a single CPU.
/// Deterministic; throws std::invalid_argument on an empty workload or a
/// non-positive quantum/floor.
Schedule run_simulation(const ProcessSet& set, const SimConfig& config);

/// Naive one-tick-at-a-time state machine with the same output contract as
/// run_simulation. Shares no scheduling code with it; exists to cross-check
/// the event-driven engine.
Schedule tick_oracle_simulate(const ProcessSet& set, const SimConfig& config);

/// {"slices": [...], "quantum_trace": [...], "finish": {...}}
std::string schedule_to_json(const Schedule& schedule);

}  // namespace mmrr
