#include "mmrr/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace mmrr {
namespace {

struct Task {
    std::size_t index = 0;  // position in the input workload
    Tick arrival = 0;       // effective arrival (zeroed in paper_faithful mode)
    Tick remaining = 0;
};

struct SimState {
    const ProcessSet& set;
    Schedule out;
    std::vector<Task> tasks;         // by input index
    std::vector<std::size_t> admit_order;  // task indices sorted by (arrival, index)
    std::size_t next_arrival = 0;
    Tick now = 0;

    SimState(const ProcessSet& s, const SimConfig& cfg) : set(s) {
        out.workload = s;
        out.config = cfg;
        tasks.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Tick arrival = cfg.arrival_mode == ArrivalMode::PaperFaithful ? 0 : s[i].arrival;
            tasks.push_back({i, arrival, s[i].burst});
        }
        admit_order.resize(s.size());
        std::iota(admit_order.begin(), admit_order.end(), std::size_t{0});
        std::stable_sort(admit_order.begin(), admit_order.end(), [this](auto a, auto b) {
            return tasks[a].arrival < tasks[b].arrival;
        });
    }

    bool pending() const { return next_arrival < admit_order.size(); }
    Tick next_pending_arrival() const { return tasks[admit_order[next_arrival]].arrival; }

    void record(std::size_t idx, Tick run) {
        out.slices.push_back({set[idx].pid, now, now + run});
        now += run;
        tasks[idx].remaining -= run;
        if (tasks[idx].remaining == 0) out.finish[set[idx].pid] = now;
    }
};

Schedule run_rr(SimState state, Tick quantum) {
    std::deque<std::size_t> queue;
    const auto admit = [&] {
        while (state.pending() && state.next_pending_arrival() <= state.now) {
            queue.push_back(state.admit_order[state.next_arrival++]);
        }
    };
    admit();
    while (!queue.empty() || state.pending()) {
        if (queue.empty()) {
            // Idle: jump to the earliest pending arrival.
            state.now = state.next_pending_arrival();
            admit();
            continue;
        }
        const std::size_t idx = queue.front();
        queue.pop_front();
        state.record(idx, std::min(quantum, state.tasks[idx].remaining));
        // Arrivals at or before the expiry instant enqueue ahead of the
        // preempted process.
        admit();
        if (state.tasks[idx].remaining > 0) queue.push_back(idx);
    }
    state.out.quantum_trace = {quantum};
    return std::move(state.out);
}

Schedule run_mmrr(SimState state, Tick floor) {
    std::vector<std::size_t> ready;  // kept sorted by input index
    const auto admit = [&] {
        while (state.pending() && state.next_pending_arrival() <= state.now) {
            ready.push_back(state.admit_order[state.next_arrival++]);
        }
        std::sort(ready.begin(), ready.end());
    };
    admit();
    while (!ready.empty() || state.pending()) {
        if (ready.empty()) {
            state.now = state.next_pending_arrival();
            admit();
            continue;
        }
        ReadyQueueState rq;
        rq.entries.reserve(ready.size());
        for (std::size_t idx : ready) {
            rq.entries.push_back(
                {state.set[idx].pid, state.tasks[idx].remaining, state.tasks[idx].arrival});
        }
        const MmrrRound round = mmrr_round(rq, floor);
        state.out.quantum_trace.push_back(round.quantum.effective);
        state.out.rounds.push_back(
            {round.quantum.raw, round.quantum.effective, round.dispatches.size()});
        for (const auto& d : round.dispatches) {
            const auto it = std::find_if(ready.begin(), ready.end(), [&](std::size_t idx) {
                return state.set[idx].pid == d.pid;
            });
            state.record(*it, d.run_length);
        }
        std::erase_if(ready, [&](std::size_t idx) { return state.tasks[idx].remaining == 0; });
        // New arrivals join only at the round recomputation, never mid-round.
        admit();
    }
    return std::move(state.out);
}

Schedule run_baseline(SimState state, Policy policy) {
    const auto order = baseline_order(state.set, policy, state.out.config.arrival_mode);
    for (std::size_t idx : order) {
        state.now = std::max(state.now, state.tasks[idx].arrival);
        state.record(idx, state.tasks[idx].remaining);
    }
    return std::move(state.out);
}

}  // namespace

Schedule run_simulation(const ProcessSet& set, const SimConfig& config) {
    if (set.empty()) throw std::invalid_argument("workload is empty");
    if (config.static_quantum < 1) throw std::invalid_argument("static quantum must be >= 1");
    if (config.quantum_floor < 1) throw std::invalid_argument("quantum floor must be >= 1");
    SimState state(set, config);
    switch (config.policy) {
        case Policy::Rr: return run_rr(std::move(state), config.static_quantum);
        case Policy::Mmrr: return run_mmrr(std::move(state), config.quantum_floor);
        case Policy::Fcfs:
        case Policy::Sjf: return run_baseline(std::move(state), config.policy);
    }
    throw std::invalid_argument("unknown policy");
}

std::string schedule_to_json(const Schedule& schedule) {
    nlohmann::json doc;
    doc["slices"] = nlohmann::json::array();
    for (const auto& s : schedule.slices) {
        doc["slices"].push_back({{"pid", s.pid}, {"start", s.start}, {"end", s.end}});
    }
    doc["quantum_trace"] = schedule.quantum_trace;
    doc["finish"] = nlohmann::json::object();
    for (const auto& [pid, t] : schedule.finish) doc["finish"][pid] = t;
    return doc.dump(2) + "\n";
}

}  // namespace mmrr
