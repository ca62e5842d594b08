#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "scuba/bench/csv.hpp"
#include "scuba/bench/experiment.hpp"
#include "scuba/bench/stats.hpp"
#include "scuba/nkq.hpp"
#include "scuba/tsp.hpp"

// Table and figure generators behind the CLI. Each returns CSV text.
//
// Seeding: one user seed S fans out per experiment cell. The instance seed
// and the master run seed of a cell are mix_seed(S, stream, cell key), where
// the cell key is (0, N, K, q, kind) for NKq and (1, N, L) for TSPn. All
// heuristics of one cell therefore share the instance and the initial
// solutions.

namespace scuba::bench {

namespace detail {

inline std::vector<std::int64_t> cell_key(const Problem& problem) {
    if (const auto* p = std::get_if<NkqProblem>(&problem)) {
        return {0, p->n, p->k, p->q, static_cast<std::int64_t>(p->kind)};
    }
    const auto& t = std::get<TspProblem>(problem);
    return {1, t.n, t.side};
}

inline std::uint64_t cell_seed(std::uint64_t seed, Stream stream, const Problem& problem) {
    return mix_seed(seed, stream, cell_key(problem));
}

}  // namespace detail

inline std::uint64_t cell_instance_seed(std::uint64_t seed, const Problem& problem) {
    return detail::cell_seed(seed, Stream::instance, problem);
}

inline std::uint64_t cell_master_seed(std::uint64_t seed, const Problem& problem) {
    return detail::cell_seed(seed, Stream::runs, problem);
}

inline std::uint64_t cell_sampling_seed(std::uint64_t seed, const Problem& problem) {
    return detail::cell_seed(seed, Stream::sampling, problem);
}

inline ExperimentSpec cell_spec(const Problem& problem, Heuristic heuristic, std::size_t runs, std::uint64_t seed) {
    return {problem, heuristic, runs, cell_master_seed(seed, problem), cell_instance_seed(seed, problem)};
}

inline std::string problem_name(const Problem& problem) {
    return std::holds_alternative<NkqProblem>(problem) ? "nkq" : "tspn";
}

inline csv::Row summary_row(const Problem& problem, Heuristic heuristic, const AggregateStats& s) {
    csv::Cell q, k, l;
    int n = 0;
    if (const auto* p = std::get_if<NkqProblem>(&problem)) {
        n = p->n;
        q = std::int64_t{p->q};
        k = std::int64_t{p->k};
    } else {
        const auto& t = std::get<TspProblem>(problem);
        n = t.n;
        l = std::int64_t{t.side};
    }
    return {problem_name(problem), std::string(to_string(heuristic)), std::int64_t{n}, q, k, l,
            static_cast<std::int64_t>(s.runs), s.mean, s.stddev, s.best_scaled, s.best.value,
            s.mean_evaluations, s.mean_steps, s.mean_flat, s.mean_gate};
}

/// Mean neutral degree per (q, K) cell.
inline std::string table1_csv(int n, std::size_t samples, std::uint64_t seed, const std::vector<int>& qs,
                              const std::vector<int>& ks, LinkKind kind, unsigned workers) {
    std::vector<NkqProblem> cells;
    for (int q : qs) {
        for (int k : ks) {
            cells.push_back({n, k, q, kind});
        }
    }
    for (const auto& c : cells) {
        validate(NkqParams{c.n, c.k, c.q, c.kind, 0});
    }
    std::vector<csv::Row> rows(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        const NkqProblem& c = cells[i];
        const double mean = nkq_sample_neutral_degree(NkqParams{c.n, c.k, c.q, c.kind, cell_instance_seed(seed, c)},
                                                      samples, cell_sampling_seed(seed, c));
        rows[i] = {std::string("nkq"), std::int64_t{c.q}, std::int64_t{c.k}, std::monostate{},
                   static_cast<std::int64_t>(samples), mean};
    });
    return csv::emit(csv::schema("neutral_degree"), std::move(rows));
}

/// Mean proportion of neutral 2-opt neighbors per lattice side.
inline std::string fig1_csv(int n, std::size_t samples, std::uint64_t seed, const std::vector<int>& sides,
                            unsigned workers) {
    for (int side : sides) {
        if (side < 1 || static_cast<long long>(n) > static_cast<long long>(side) * side || n < 4) {
            throw std::invalid_argument("fig1: need 4 <= N <= L^2");
        }
    }
    std::vector<csv::Row> rows(sides.size());
    parallel_for(sides.size(), workers, [&](std::size_t i) {
        const TspProblem cell{sides[i], n};
        const double prop = tsp_sample_neutral_proportion(cell.side, n, samples, cell_sampling_seed(seed, cell));
        rows[i] = {std::string("tspn"), std::int64_t{n}, std::int64_t{cell.side}, static_cast<std::int64_t>(samples),
                   static_cast<double>(n) / (static_cast<double>(cell.side) * cell.side), prop};
    });
    return csv::emit(csv::schema("neutral_proportion"), std::move(rows));
}

/// One summary row per (problem cell, heuristic). Runs inside a cell go to the worker pool.
inline std::string summary_csv(const std::vector<Problem>& cells, const std::vector<Heuristic>& heuristics,
                               std::size_t runs, std::uint64_t seed, unsigned workers) {
    std::vector<csv::Row> rows;
    for (const Problem& cell : cells) {
        for (Heuristic h : heuristics) {
            const ExperimentSpec spec = cell_spec(cell, h, runs, seed);
            const auto results = run_experiment(spec, workers);
            rows.push_back(summary_row(cell, h, aggregate(results, direction_of(cell), report_scale(cell))));
        }
    }
    return csv::emit(csv::schema("summary"), std::move(rows));
}

inline std::vector<Problem> nkq_cells(int n, const std::vector<int>& qs, const std::vector<int>& ks, LinkKind kind) {
    std::vector<Problem> cells;
    for (int q : qs) {
        for (int k : ks) {
            validate(NkqParams{n, k, q, kind, 0});
            cells.emplace_back(NkqProblem{n, k, q, kind});
        }
    }
    return cells;
}

inline std::vector<Problem> tsp_cells(int n, const std::vector<int>& sides) {
    std::vector<Problem> cells;
    for (int side : sides) {
        if (side < 1 || n < 4 || static_cast<long long>(n) > static_cast<long long>(side) * side) {
            throw std::invalid_argument("TSPn: need 4 <= N <= L^2");
        }
        cells.emplace_back(TspProblem{side, n});
    }
    return cells;
}

/// Formats per-run records (and trace rows, when both pointers are given).
inline std::string runs_csv_from(const ExperimentSpec& spec, const std::vector<RunResult>& results,
                                 const std::vector<TraceRow>* trace, std::string* trace_csv) {
    const double scale = report_scale(spec.problem);
    std::vector<csv::Row> rows;
    for (const RunResult& r : results) {
        rows.push_back({problem_name(spec.problem), std::string(to_string(spec.heuristic)),
                        static_cast<std::int64_t>(r.run), std::to_string(r.seed), r.initial.value, r.final.value,
                        static_cast<double>(r.final.value) * scale, static_cast<std::int64_t>(r.steps),
                        static_cast<std::int64_t>(r.flat_count), static_cast<std::int64_t>(r.gate_count),
                        static_cast<std::int64_t>(r.evaluations)});
    }
    if (trace && trace_csv) {
        std::vector<csv::Row> trows;
        for (const TraceRow& t : *trace) {
            trows.push_back({static_cast<std::int64_t>(t.run), static_cast<std::int64_t>(t.move),
                             std::string(to_string(t.kind)), t.before.value, t.after.value,
                             static_cast<std::int64_t>(t.evaluations)});
        }
        *trace_csv = csv::emit(csv::schema("trace"), std::move(trows));
    }
    return csv::emit(csv::schema("runs"), std::move(rows));
}

/// Raw per-run records of a single experiment, plus the optional move trace.
inline std::string runs_csv(const ExperimentSpec& spec, unsigned workers, std::string* trace_csv = nullptr) {
    std::vector<TraceRow> trace;
    const auto results = run_experiment(spec, workers, trace_csv ? &trace : nullptr);
    return runs_csv_from(spec, results, trace_csv ? &trace : nullptr, trace_csv);
}

}  // namespace scuba::bench
