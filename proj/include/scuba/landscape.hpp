#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "scuba/fitness.hpp"
#include "scuba/random.hpp"

namespace scuba {

/// Contract shared by every landscape family.
///
/// Neighborhoods are indexed by a move number in [0, neighborhood_size()).
/// `neighbor(s, m)` never equals s; the inclusive neighborhood used by the
/// definitions of evolvability is neighbors(s) plus s itself.
/// `neighbor_fitness(s, f(s), m)` must equal `evaluate(neighbor(s, m))`; a
/// landscape may compute it incrementally.
template <class L>
concept Landscape = requires(const L& land, const typename L::solution_type& s, std::size_t move, Fitness f,
                             Rng& rng) {
    typename L::solution_type;
    { land.direction() } -> std::same_as<Direction>;
    { land.neighborhood_size() } -> std::convertible_to<std::size_t>;
    { land.evaluate(s) } -> std::same_as<Fitness>;
    { land.neighbor(s, move) } -> std::same_as<typename L::solution_type>;
    { land.neighbor_fitness(s, f, move) } -> std::same_as<Fitness>;
    { land.random_solution(rng) } -> std::same_as<typename L::solution_type>;
};

template <Landscape L>
using solution_t = typename L::solution_type;

/// Per-run view of a shared landscape that counts fitness evaluations.
///
/// Every evaluation, full or incremental, counts once. Nothing is cached.
template <Landscape L>
class Evaluator {
public:
    using solution_type = solution_t<L>;

    explicit Evaluator(const L& land) : land_(&land) {}

    Fitness operator()(const solution_type& s) {
        ++count_;
        return land_->evaluate(s);
    }

    Fitness neighbor(const solution_type& s, Fitness fs, std::size_t move) {
        ++count_;
        return land_->neighbor_fitness(s, fs, move);
    }

    const L& landscape() const noexcept { return *land_; }
    Direction direction() const { return land_->direction(); }
    std::size_t neighborhood_size() const { return land_->neighborhood_size(); }
    std::uint64_t count() const noexcept { return count_; }

private:
    const L* land_;
    std::uint64_t count_ = 0;
};

template <Landscape L>
Evaluator(const L&) -> Evaluator<L>;

/// Fitness of a solution and of each of its neighbors, in move order.
struct NeighborhoodScan {
    Fitness self;
    Fitness best;  // evol: best over neighbors and self
    std::vector<Fitness> moves;
};

/// Evaluates s and all its neighbors: 1 + |neighbors(s)| evaluations.
template <Landscape L>
NeighborhoodScan scan_neighborhood(Evaluator<L>& ev, const solution_t<L>& s) {
    const Direction dir = ev.direction();
    const std::size_t n = ev.neighborhood_size();
    NeighborhoodScan out;
    out.self = ev(s);
    out.best = out.self;
    out.moves.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const Fitness f = ev.neighbor(s, out.self, m);
        out.moves[m] = f;
        if (better(dir, f, out.best)) {
            out.best = f;
        }
    }
    return out;
}

/// Materialized neighborhood, in move order.
template <Landscape L>
std::vector<solution_t<L>> neighbors(const L& land, const solution_t<L>& s) {
    const std::size_t n = land.neighborhood_size();
    std::vector<solution_t<L>> out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        out.push_back(land.neighbor(s, m));
    }
    return out;
}

}  // namespace scuba
