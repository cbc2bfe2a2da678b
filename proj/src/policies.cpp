#include "mmrr/policies.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mmrr {

Policy policy_from_string(const std::string& name) {
    if (name == "rr") return Policy::Rr;
    if (name == "mmrr") return Policy::Mmrr;
    if (name == "fcfs") return Policy::Fcfs;
    if (name == "sjf") return Policy::Sjf;
    throw std::invalid_argument("unknown policy '" + name + "' (expected rr, mmrr, fcfs, sjf)");
}

std::string to_string(Policy policy) {
    switch (policy) {
        case Policy::Rr: return "rr";
        case Policy::Mmrr: return "mmrr";
        case Policy::Fcfs: return "fcfs";
        case Policy::Sjf: return "sjf";
    }
    return "?";
}

ArrivalMode arrival_mode_from_string(const std::string& name) {
    if (name == "standard") return ArrivalMode::Standard;
    if (name == "paper_faithful") return ArrivalMode::PaperFaithful;
    throw std::invalid_argument("unknown arrival mode '" + name +
                                "' (expected standard, paper_faithful)");
}

std::string to_string(ArrivalMode mode) {
    return mode == ArrivalMode::Standard ? "standard" : "paper_faithful";
}

QuantumDecision compute_min_max_quantum(std::span<const Tick> remaining, Tick quantum_floor) {
    if (remaining.empty()) throw std::invalid_argument("quantum of an empty ready set");
    if (quantum_floor < 1) throw std::invalid_argument("quantum floor must be >= 1");
    QuantumDecision decision;
    if (remaining.size() == 1) {
        // A lone process gets its own remaining burst as the raw quantum.
        decision.raw = remaining.front();
    } else {
        const auto [lo, hi] = std::minmax_element(remaining.begin(), remaining.end());
        decision.raw = *hi - *lo;
    }
    decision.effective = decision.raw < quantum_floor ? quantum_floor : decision.raw;
    return decision;
}

MmrrRound mmrr_round(const ReadyQueueState& state, Tick quantum_floor) {
    if (state.entries.empty()) throw std::invalid_argument("round over an empty ready set");

    std::vector<std::size_t> order(state.entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Ties by arrival, then by input order (the entries' own order).
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ea = state.entries[a];
        const auto& eb = state.entries[b];
        if (ea.remaining != eb.remaining) return ea.remaining < eb.remaining;
        return ea.arrival < eb.arrival;
    });

    std::vector<Tick> remaining;
    remaining.reserve(state.entries.size());
    for (const auto& e : state.entries) remaining.push_back(e.remaining);

    MmrrRound round;
    round.quantum = compute_min_max_quantum(remaining, quantum_floor);
    round.dispatches.reserve(order.size());
    for (std::size_t idx : order) {
        const auto& e = state.entries[idx];
        round.dispatches.push_back({e.pid, std::min(round.quantum.effective, e.remaining)});
    }
    return round;
}

Dispatch rr_next_dispatch(const ReadyQueueState& queue, Tick static_quantum) {
    if (queue.entries.empty()) throw std::invalid_argument("dispatch from an empty queue");
    if (static_quantum < 1) throw std::invalid_argument("static quantum must be >= 1");
    const auto& head = queue.entries.front();
    return {head.pid, std::min(static_quantum, head.remaining)};
}

std::vector<std::size_t> baseline_order(const ProcessSet& set, Policy policy, ArrivalMode mode) {
    if (policy != Policy::Fcfs && policy != Policy::Sjf) {
        throw std::invalid_argument("baseline_order expects fcfs or sjf");
    }
    const std::size_t n = set.size();
    const auto arrival_of = [&](std::size_t i) {
        return mode == ArrivalMode::PaperFaithful ? Tick{0} : set[i].arrival;
    };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (policy == Policy::Fcfs) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return arrival_of(a) < arrival_of(b);
        });
        return order;
    }

    // SJF: replay completions, choosing among processes admitted by the
    // current clock; the clock jumps ahead when nothing has arrived.
    std::vector<bool> done(n, false);
    std::vector<std::size_t> result;
    result.reserve(n);
    Tick now = 0;
    while (result.size() < n) {
        std::size_t best = n;
        Tick next_arrival = std::numeric_limits<Tick>::max();
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (arrival_of(i) > now) {
                next_arrival = std::min(next_arrival, arrival_of(i));
                continue;
            }
            if (best == n) {
                best = i;
                continue;
            }
            const auto key = [&](std::size_t j) {
                return std::tuple(set[j].burst, arrival_of(j), j);
            };
            if (key(i) < key(best)) best = i;
        }
        if (best == n) {
            now = next_arrival;
            continue;
        }
        done[best] = true;
        result.push_back(best);
        now = std::max(now, arrival_of(best)) + set[best].burst;
    }
    return result;
}

}  // namespace mmrr
