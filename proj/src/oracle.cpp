#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "mmrr/engine.hpp"

// Verification oracle. Everything here advances the clock one tick at a
// time and re-derives the dispatch rules from scratch; it deliberately does
// not call into the policies module or share loop structure with engine.cpp.

namespace mmrr {
namespace {

struct OTask {
    std::size_t index = 0;
    Tick arrival = 0;
    Tick remaining = 0;
    bool admitted = false;
};

struct Running {
    std::size_t idx = 0;
    Tick slice_start = 0;
    Tick budget = 0;
};

class TickSim {
public:
    TickSim(const ProcessSet& set, const SimConfig& cfg) : set_(set), cfg_(cfg) {
        out_.workload = set;
        out_.config = cfg;
        for (std::size_t i = 0; i < set.size(); ++i) {
            const Tick arr = cfg.arrival_mode == ArrivalMode::PaperFaithful ? 0 : set[i].arrival;
            tasks_.push_back({i, arr, set[i].burst, false});
        }
    }

    Schedule run() {
        switch (cfg_.policy) {
            case Policy::Rr: run_rr(); break;
            case Policy::Mmrr: run_mmrr(); break;
            case Policy::Fcfs: run_nonpreemptive(false); break;
            case Policy::Sjf: run_nonpreemptive(true); break;
        }
        return std::move(out_);
    }

private:
    const ProcessSet& set_;
    SimConfig cfg_;
    Schedule out_;
    std::vector<OTask> tasks_;
    Tick now_ = 0;

    bool all_done() const {
        return std::all_of(tasks_.begin(), tasks_.end(),
                           [](const OTask& t) { return t.remaining == 0; });
    }

    // Marks every not-yet-admitted task with arrival <= now, returning them
    // ordered by (arrival, input index).
    std::vector<std::size_t> take_arrivals() {
        std::vector<std::size_t> newly;
        for (auto& t : tasks_) {
            if (!t.admitted && t.arrival <= now_) {
                t.admitted = true;
                newly.push_back(t.index);
            }
        }
        std::stable_sort(newly.begin(), newly.end(), [&](std::size_t a, std::size_t b) {
            return tasks_[a].arrival < tasks_[b].arrival;
        });
        return newly;
    }

    void end_slice(const Running& r) {
        out_.slices.push_back({set_[r.idx].pid, r.slice_start, now_});
        if (tasks_[r.idx].remaining == 0) out_.finish[set_[r.idx].pid] = now_;
    }

    void run_rr() {
        std::deque<std::size_t> queue;
        Running run;
        bool running = false;
        while (true) {
            if (!running) {
                for (std::size_t i : take_arrivals()) queue.push_back(i);
                if (!queue.empty()) {
                    const std::size_t idx = queue.front();
                    queue.pop_front();
                    run = {idx, now_, std::min(cfg_.static_quantum, tasks_[idx].remaining)};
                    running = true;
                } else if (all_done()) {
                    break;
                } else {
                    ++now_;  // idle tick
                    continue;
                }
            }
            --tasks_[run.idx].remaining;
            --run.budget;
            ++now_;
            if (tasks_[run.idx].remaining == 0) {
                end_slice(run);
                running = false;
            } else if (run.budget == 0) {
                end_slice(run);
                // Arrivals at the expiry instant go ahead of the preempted task.
                for (std::size_t i : take_arrivals()) queue.push_back(i);
                queue.push_back(run.idx);
                running = false;
            }
        }
        out_.quantum_trace = {cfg_.static_quantum};
    }

    void run_mmrr() {
        std::deque<std::size_t> round_queue;
        Running run;
        bool running = false;
        while (true) {
            if (!running) {
                if (!round_queue.empty()) {
                    const std::size_t idx = round_queue.front();
                    round_queue.pop_front();
                    run = {idx, now_, current_run_length(idx)};
                    running = true;
                } else {
                    take_arrivals();
                    std::vector<std::size_t> ready;
                    for (const auto& t : tasks_) {
                        if (t.admitted && t.remaining > 0) ready.push_back(t.index);
                    }
                    if (ready.empty()) {
                        if (all_done()) break;
                        ++now_;  // idle tick
                        continue;
                    }
                    start_round(ready, round_queue);
                    continue;
                }
            }
            --tasks_[run.idx].remaining;
            --run.budget;
            ++now_;
            if (tasks_[run.idx].remaining == 0 || run.budget == 0) {
                end_slice(run);
                running = false;
            }
        }
    }

    Tick round_quantum_ = 0;

    Tick current_run_length(std::size_t idx) const {
        return std::min(round_quantum_, tasks_[idx].remaining);
    }

    void start_round(std::vector<std::size_t>& ready, std::deque<std::size_t>& round_queue) {
        Tick lo = tasks_[ready.front()].remaining;
        Tick hi = lo;
        for (std::size_t i : ready) {
            lo = std::min(lo, tasks_[i].remaining);
            hi = std::max(hi, tasks_[i].remaining);
        }
        const Tick raw = ready.size() == 1 ? tasks_[ready.front()].remaining : hi - lo;
        round_quantum_ = std::max(raw, cfg_.quantum_floor);
        out_.quantum_trace.push_back(round_quantum_);
        out_.rounds.push_back({raw, round_quantum_, ready.size()});
        std::sort(ready.begin(), ready.end(), [&](std::size_t a, std::size_t b) {
            return std::tuple(tasks_[a].remaining, tasks_[a].arrival, a) <
                   std::tuple(tasks_[b].remaining, tasks_[b].arrival, b);
        });
        round_queue.assign(ready.begin(), ready.end());
    }

    void run_nonpreemptive(bool shortest_first) {
        Running run;
        bool running = false;
        while (true) {
            if (!running) {
                take_arrivals();
                std::size_t best = tasks_.size();
                for (const auto& t : tasks_) {
                    if (!t.admitted || t.remaining == 0) continue;
                    if (best == tasks_.size()) {
                        best = t.index;
                        continue;
                    }
                    const auto key = [&](const OTask& x) {
                        return shortest_first ? std::tuple(x.remaining, x.arrival, x.index)
                                              : std::tuple(Tick{0}, x.arrival, x.index);
                    };
                    if (key(t) < key(tasks_[best])) best = t.index;
                }
                if (best == tasks_.size()) {
                    if (all_done()) break;
                    ++now_;  // idle tick
                    continue;
                }
                run = {best, now_, tasks_[best].remaining};
                running = true;
            }
            --tasks_[run.idx].remaining;
            --run.budget;
            ++now_;
            if (run.budget == 0) {
                end_slice(run);
                running = false;
            }
        }
    }
};

}  // namespace

Schedule tick_oracle_simulate(const ProcessSet& set, const SimConfig& config) {
    if (set.empty()) throw std::invalid_argument("workload is empty");
    if (config.static_quantum < 1) throw std::invalid_argument("static quantum must be >= 1");
    if (config.quantum_floor < 1) throw std::invalid_argument("quantum floor must be >= 1");
    return TickSim(set, config).run();
}

}  // namespace mmrr
