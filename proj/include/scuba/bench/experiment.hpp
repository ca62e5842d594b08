#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "scuba/bench/stats.hpp"
#include "scuba/landscape.hpp"
#include "scuba/nkq.hpp"
#include "scuba/random.hpp"
#include "scuba/search.hpp"
#include "scuba/tsp.hpp"

namespace scuba::bench {

struct NkqProblem {
    int n = 64;
    int k = 0;
    int q = 2;
    LinkKind kind = LinkKind::random;
};

struct TspProblem {
    int side = 10;
    int n = 64;
};

using Problem = std::variant<NkqProblem, TspProblem>;

/// Everything needed to reproduce an experiment.
struct ExperimentSpec {
    Problem problem;
    Heuristic heuristic = Heuristic::hc;
    std::size_t runs = 1;
    std::uint64_t master_seed = 0;
    std::uint64_t instance_seed = 0;
};

struct TraceRow {
    std::uint64_t run = 0;
    std::uint64_t move = 0;
    MoveKind kind = MoveKind::climb;
    Fitness before;
    Fitness after;
    std::uint64_t evaluations = 0;
};

inline unsigned default_workers() {
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any call is rethrown after all threads have joined.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

/// `runs` searches on one shared instance. Run i uses the seed
/// derive_run_seed(master_seed, i) both for its initial solution and its
/// tie-breaking, so results do not depend on scheduling. Trace rows, if
/// requested, come back grouped by run in run order.
template <Landscape L>
std::vector<RunResult> run_experiment(const L& land, Heuristic heuristic, std::size_t runs, std::uint64_t master_seed,
                                      unsigned workers = 1, std::vector<TraceRow>* trace = nullptr) {
    using S = solution_t<L>;
    std::vector<RunResult> results(runs);
    std::vector<std::vector<TraceRow>> traces(trace ? runs : 0);
    parallel_for(runs, workers, [&](std::size_t i) {
        const std::uint64_t seed = derive_run_seed(master_seed, i);
        Rng rng(seed);
        S s0 = land.random_solution(rng);
        MoveObserver<S> observer;
        if (trace) {
            observer = [&traces, i](const MoveRecord<S>& m) {
                auto& rows = traces[i];
                rows.push_back({i, rows.size(), m.kind, m.before, m.after, m.evaluations});
            };
        }
        const auto out = run_heuristic(heuristic, land, std::move(s0), rng, observer);
        results[i] = {i, seed, out.initial_fitness, out.fitness, out.steps, out.flat_count, out.gate_count,
                      out.evaluations};
    });
    if (trace) {
        trace->clear();
        for (auto& rows : traces) {
            trace->insert(trace->end(), rows.begin(), rows.end());
        }
    }
    return results;
}

inline NkqInstance build_instance(const NkqProblem& p, std::uint64_t seed) {
    return nkq_build({p.n, p.k, p.q, p.kind, seed});
}

inline LatticeInstance build_instance(const TspProblem& p, std::uint64_t seed) {
    return tsp_build(p.side, p.n, seed);
}

/// Builds the instance once from spec.instance_seed and runs every search on it.
inline std::vector<RunResult> run_experiment(const ExperimentSpec& spec, unsigned workers = 1,
                                             std::vector<TraceRow>* trace = nullptr) {
    if (spec.runs == 0) {
        throw std::invalid_argument("experiment: runs must be positive");
    }
    return std::visit(
        [&](const auto& problem) {
            const auto land = build_instance(problem, spec.instance_seed);
            return run_experiment(land, spec.heuristic, spec.runs, spec.master_seed, workers, trace);
        },
        spec.problem);
}

/// Factor converting raw fitness into reporting units.
inline double report_scale(const NkqInstance& inst) { return 1.0 / static_cast<double>(inst.max_raw()); }
inline double report_scale(const LatticeInstance&) { return 1.0; }

inline double report_scale(const Problem& problem) {
    if (const auto* p = std::get_if<NkqProblem>(&problem)) {
        return 1.0 / (static_cast<double>(p->n) * (p->q - 1));
    }
    return 1.0;
}

inline Direction direction_of(const Problem& problem) {
    return std::holds_alternative<NkqProblem>(problem) ? Direction::maximize : Direction::minimize;
}

}  // namespace scuba::bench
