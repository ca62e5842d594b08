#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "scuba/fitness.hpp"
#include "scuba/landscape.hpp"

// Neutrality and evolvability primitives.
//
// Our neighbor enumerations exclude s, while the definitions are stated over
// the inclusive neighborhood V(s) = neighbors(s) + {s}. Every function below
// is written against the inclusive set where it matters (evol, evol2) and
// against the exclusive set where the definition subtracts s (Degn).

namespace scuba {

/// Best fitness over s and its neighbors. Costs 1 + |neighbors(s)| evaluations.
template <Landscape L>
Fitness evol(Evaluator<L>& ev, const solution_t<L>& s) {
    return scan_neighborhood(ev, s).best;
}

/// Move indices of the neighbors whose fitness equals f(s).
inline std::vector<std::size_t> neutral_moves(const NeighborhoodScan& scan) {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < scan.moves.size(); ++m) {
        if (scan.moves[m] == scan.self) {
            out.push_back(m);
        }
    }
    return out;
}

/// Neighbors with exactly the fitness of s (s itself excluded).
template <Landscape L>
std::vector<solution_t<L>> neutral_neighbors(Evaluator<L>& ev, const solution_t<L>& s) {
    const NeighborhoodScan scan = scan_neighborhood(ev, s);
    std::vector<solution_t<L>> out;
    for (std::size_t m : neutral_moves(scan)) {
        out.push_back(ev.landscape().neighbor(s, m));
    }
    return out;
}

/// Degn(s): the number of neutral neighbors, s excluded.
template <Landscape L>
std::size_t neutral_degree(Evaluator<L>& ev, const solution_t<L>& s) {
    const NeighborhoodScan scan = scan_neighborhood(ev, s);
    return static_cast<std::size_t>(std::count(scan.moves.begin(), scan.moves.end(), scan.self));
}

/// True iff no solution of w(s) is strictly better than s under g.
template <Landscape L, class G, class W>
    requires std::invocable<G&, const solution_t<L>&> && std::invocable<W&, const solution_t<L>&>
bool is_local(const L& land, const solution_t<L>& s, G&& g, W&& w) {
    const Direction dir = land.direction();
    const Fitness here = std::invoke(g, s);
    for (const auto& other : std::invoke(w, s)) {
        if (better(dir, std::invoke(g, other), here)) {
            return false;
        }
    }
    return true;
}

/// Local-neutral optimum: no neutral neighbor has strictly better evolvability.
/// Vacuously true when s has no neutral neighbor.
template <Landscape L>
bool is_local_neutral(Evaluator<L>& ev, const solution_t<L>& s) {
    const Direction dir = ev.direction();
    const NeighborhoodScan scan = scan_neighborhood(ev, s);
    for (std::size_t m : neutral_moves(scan)) {
        const auto nb = ev.landscape().neighbor(s, m);
        if (better(dir, evol(ev, nb), scan.best)) {
            return false;
        }
    }
    return true;
}

/// Union of the inclusive neighborhoods of every inclusive neighbor of s,
/// deduplicated and without s. Sorted by the solution ordering.
template <Landscape L>
    requires std::totally_ordered<solution_t<L>>
std::vector<solution_t<L>> extended_neighbors(const L& land, const solution_t<L>& s) {
    std::set<solution_t<L>> seen;
    for (const auto& first : neighbors(land, s)) {
        seen.insert(first);
        for (auto second : neighbors(land, first)) {
            seen.insert(std::move(second));
        }
    }
    seen.erase(s);
    return {seen.begin(), seen.end()};
}

/// Best fitness over the extended neighborhood (s included).
/// Costs (1 + |V|) + |V| * (1 + |V|) evaluations; duplicates are not skipped.
template <Landscape L>
Fitness evol2(Evaluator<L>& ev, const solution_t<L>& s) {
    const Direction dir = ev.direction();
    const std::size_t n = ev.neighborhood_size();
    Fitness best = evol(ev, s);
    for (std::size_t m = 0; m < n; ++m) {
        best = best_of(dir, best, evol(ev, ev.landscape().neighbor(s, m)));
    }
    return best;
}

/// Mean Degn over `samples` uniform random solutions drawn from `rng`.
template <Landscape L>
double mean_neutral_degree(const L& land, std::size_t samples, Rng& rng) {
    if (samples == 0) {
        throw std::invalid_argument("mean_neutral_degree: need at least one sample");
    }
    const std::size_t n = land.neighborhood_size();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto s = land.random_solution(rng);
        const Fitness fs = land.evaluate(s);
        for (std::size_t m = 0; m < n; ++m) {
            total += land.neighbor_fitness(s, fs, m) == fs ? 1 : 0;
        }
    }
    return static_cast<double>(total) / static_cast<double>(samples);
}

}  // namespace scuba
