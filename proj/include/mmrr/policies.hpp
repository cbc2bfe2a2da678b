#pragma once

#include <span>
#include <string>
#include <vector>

#include "mmrr/workload.hpp"

namespace mmrr {

enum class Policy { Rr, Mmrr, Fcfs, Sjf };
enum class ArrivalMode { Standard, PaperFaithful };

Policy policy_from_string(const std::string& name);
std::string to_string(Policy policy);
ArrivalMode arrival_mode_from_string(const std::string& name);
std::string to_string(ArrivalMode mode);

/// Per-round quantum choice. `raw` is the dispersion max(remaining) -
/// min(remaining) when two or more processes are ready, or the lone
/// process's remaining burst otherwise; `effective` is raw clamped up to
/// the configured floor.
struct QuantumDecision {
    Tick raw = 0;
    Tick effective = 0;

    bool operator==(const QuantumDecision&) const = default;
};

struct ReadyEntry {
    std::string pid;
    Tick remaining = 0;
    Tick arrival = 0;
};

/// Snapshot of the ready queue. Entries must be kept in input order; the
/// round sort uses that order as the final tie-breaker.
struct ReadyQueueState {
    std::vector<ReadyEntry> entries;
};

struct Dispatch {
    std::string pid;
    Tick run_length = 0;

    bool operator==(const Dispatch&) const = default;
};

/// One adaptive round: entries sorted ascending by remaining burst (ties:
/// arrival, then input order), each dispatched once for
/// min(effective quantum, remaining).
struct MmrrRound {
    std::vector<Dispatch> dispatches;
    QuantumDecision quantum;
};

QuantumDecision compute_min_max_quantum(std::span<const Tick> remaining, Tick quantum_floor);

MmrrRound mmrr_round(const ReadyQueueState& state, Tick quantum_floor);

/// Head of the FIFO queue runs min(static_quantum, remaining).
Dispatch rr_next_dispatch(const ReadyQueueState& queue, Tick static_quantum);

/// Non-preemptive dispatch order for the FCFS and SJF baselines, as indices
/// into the set. SJF picks the shortest admitted burst at each completion
/// (ties: arrival, then input order).
std::vector<std::size_t> baseline_order(const ProcessSet& set, Policy policy,
                                        ArrivalMode mode = ArrivalMode::Standard);

}  // namespace mmrr
