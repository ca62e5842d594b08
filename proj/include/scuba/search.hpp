#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scuba/fitness.hpp"
#include "scuba/landscape.hpp"
#include "scuba/neutrality.hpp"
#include "scuba/random.hpp"

namespace scuba {

enum class Heuristic { hc, ss, hc2 };

inline std::string_view to_string(Heuristic h) {
    switch (h) {
        case Heuristic::hc: return "hc";
        case Heuristic::ss: return "ss";
        case Heuristic::hc2: return "hc2";
    }
    return "?";
}

inline Heuristic parse_heuristic(std::string_view text) {
    if (text == "hc") return Heuristic::hc;
    if (text == "ss") return Heuristic::ss;
    if (text == "hc2") return Heuristic::hc2;
    throw std::invalid_argument("unknown heuristic: " + std::string(text));
}

enum class MoveKind { climb, neutral, jump };

inline std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::climb: return "climb";
        case MoveKind::neutral: return "neutral";
        case MoveKind::jump: return "jump";
    }
    return "?";
}

/// One accepted move, reported to an observer.
template <class S>
struct MoveRecord {
    MoveKind kind;
    const S& from;
    const S& to;
    Fitness before;
    Fitness after;
    std::uint64_t evaluations;  // cumulative, at the time of the move
};

template <class S>
using MoveObserver = std::function<void(const MoveRecord<S>&)>;

template <class S>
struct SearchOutcome {
    S solution;
    Fitness fitness;
    Fitness initial_fitness;
    std::uint64_t steps = 0;       // HC, HC2 loop iterations
    std::uint64_t flat_count = 0;  // SS neutral moves
    std::uint64_t gate_count = 0;  // SS jumps
    std::uint64_t evaluations = 0;
};

namespace detail {

// Move indices whose value equals `target`.
inline void collect_equal(const std::vector<Fitness>& values, Fitness target, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t m = 0; m < values.size(); ++m) {
        if (values[m] == target) {
            out.push_back(m);
        }
    }
}

template <class S>
void notify(const MoveObserver<S>& obs, MoveKind kind, const S& from, const S& to, Fitness before, Fitness after,
            std::uint64_t evals) {
    if (obs) {
        obs(MoveRecord<S>{kind, from, to, before, after, evals});
    }
}

}  // namespace detail

/// Hill climbing, with the repeat-until shape kept as is: the body runs at
/// least once, picking uniformly among the members of the inclusive
/// neighborhood (s included) that reach evol(s). An immediate local optimum
/// therefore reports steps = 1 and may take one neutral sidestep.
///
/// Evaluations: 1 + |V| per scan, one scan per iteration plus the initial one.
template <Landscape L>
SearchOutcome<solution_t<L>> hill_climb(const L& land, solution_t<L> s, Rng& rng,
                                        const MoveObserver<solution_t<L>>& observer = {}) {
    using S = solution_t<L>;
    Evaluator<L> ev(land);
    const Direction dir = land.direction();
    const std::size_t self_index = land.neighborhood_size();
    SearchOutcome<S> out;
    NeighborhoodScan here = scan_neighborhood(ev, s);
    out.initial_fitness = here.self;
    std::vector<std::size_t> choices;
    do {
        detail::collect_equal(here.moves, here.best, choices);
        if (here.self == here.best) {
            choices.push_back(self_index);
        }
        const std::size_t pick = choices[rng.index(choices.size())];
        ++out.steps;
        if (pick != self_index) {
            S next = land.neighbor(s, pick);
            const Fitness before = here.self;
            here = scan_neighborhood(ev, next);
            detail::notify(observer, here.self == before ? MoveKind::neutral : MoveKind::climb, s, next, before,
                           here.self, ev.count());
            s = std::move(next);
        }
    } while (better(dir, here.best, here.self));
    out.fitness = here.self;
    out.solution = std::move(s);
    out.evaluations = ev.count();
    return out;
}

namespace detail {

// f(s), evol(s), evol2(s) plus f and evol of every neighbor.
struct TwoStepScan {
    Fitness self;
    Fitness evol;
    Fitness evol2;
    std::vector<Fitness> moves;
    std::vector<Fitness> move_evol;
};

// (1 + |V|) + |V| * (1 + |V|) evaluations.
template <Landscape L>
TwoStepScan scan_two_steps(Evaluator<L>& ev, const solution_t<L>& s) {
    const Direction dir = ev.direction();
    NeighborhoodScan first = scan_neighborhood(ev, s);
    TwoStepScan out;
    out.self = first.self;
    out.evol = first.best;
    out.evol2 = first.best;
    out.moves = std::move(first.moves);
    out.move_evol.resize(out.moves.size());
    for (std::size_t m = 0; m < out.moves.size(); ++m) {
        out.move_evol[m] = evol(ev, ev.landscape().neighbor(s, m));
        out.evol2 = best_of(dir, out.evol2, out.move_evol[m]);
    }
    return out;
}

}  // namespace detail

/// Hill climbing over the distance-two neighborhood. When evol(s) already
/// equals evol2(s) the move goes straight to a best neighbor; otherwise to a
/// neighbor whose own evolvability reaches evol2(s). Stops at a V^2-local point.
template <Landscape L>
SearchOutcome<solution_t<L>> hill_climb_two_steps(const L& land, solution_t<L> s, Rng& rng,
                                                  const MoveObserver<solution_t<L>>& observer = {}) {
    using S = solution_t<L>;
    Evaluator<L> ev(land);
    const Direction dir = land.direction();
    const std::size_t self_index = land.neighborhood_size();
    SearchOutcome<S> out;
    detail::TwoStepScan here = detail::scan_two_steps(ev, s);
    out.initial_fitness = here.self;
    std::vector<std::size_t> choices;
    do {
        if (here.evol == here.evol2) {
            detail::collect_equal(here.moves, here.evol2, choices);
            if (here.self == here.evol2) {
                choices.push_back(self_index);
            }
        } else {
            // evol(s) differs from evol2(s), so s itself never qualifies.
            detail::collect_equal(here.move_evol, here.evol2, choices);
        }
        const std::size_t pick = choices[rng.index(choices.size())];
        ++out.steps;
        if (pick != self_index) {
            S next = land.neighbor(s, pick);
            const Fitness before = here.self;
            here = detail::scan_two_steps(ev, next);
            detail::notify(observer, here.self == before ? MoveKind::neutral : MoveKind::climb, s, next, before,
                           here.self, ev.count());
            s = std::move(next);
        }
    } while (better(dir, here.evol2, here.self));
    out.fitness = here.self;
    out.solution = std::move(s);
    out.evaluations = ev.count();
    return out;
}

/// Scuba search.
///
/// Neutral phase: while some neutral neighbor has strictly better
/// evolvability than s, move to one with the best such evolvability.
/// Then stop if s is a local optimum (evol(s) = f(s)); otherwise jump to a
/// non-neutral neighbor reaching evol(s) and start over.
///
/// Evaluations per neutral-phase check: (1 + Degn(s)) * (1 + |V|).
template <Landscape L>
SearchOutcome<solution_t<L>> scuba_search(const L& land, solution_t<L> s, Rng& rng,
                                          const MoveObserver<solution_t<L>>& observer = {}) {
    using S = solution_t<L>;
    Evaluator<L> ev(land);
    const Direction dir = land.direction();
    SearchOutcome<S> out;
    NeighborhoodScan here = scan_neighborhood(ev, s);
    out.initial_fitness = here.self;
    std::vector<std::size_t> choices;
    for (;;) {
        // Conquest of the waters.
        for (;;) {
            bool any = false;
            Fitness best_neutral_evol;
            choices.clear();
            for (std::size_t m = 0; m < here.moves.size(); ++m) {
                if (here.moves[m] != here.self) {
                    continue;
                }
                const Fitness e = evol(ev, land.neighbor(s, m));
                if (!any || better(dir, e, best_neutral_evol)) {
                    any = true;
                    best_neutral_evol = e;
                    choices.assign(1, m);
                } else if (e == best_neutral_evol) {
                    choices.push_back(m);
                }
            }
            if (!any || !better(dir, best_neutral_evol, here.best)) {
                break;  // local-neutral optimum
            }
            S next = land.neighbor(s, choices[rng.index(choices.size())]);
            const Fitness before = here.self;
            here = scan_neighborhood(ev, next);
            if (here.self != before) {
                throw std::logic_error("scuba_search: neutral move changed fitness");
            }
            ++out.flat_count;
            detail::notify(observer, MoveKind::neutral, s, next, before, here.self, ev.count());
            s = std::move(next);
        }
        if (!better(dir, here.best, here.self)) {
            break;  // local optimum
        }
        // Invasion of the land: evol(s) is strictly better than f(s), so every
        // neighbor reaching it is non-neutral.
        detail::collect_equal(here.moves, here.best, choices);
        S next = land.neighbor(s, choices[rng.index(choices.size())]);
        const Fitness before = here.self;
        here = scan_neighborhood(ev, next);
        ++out.gate_count;
        detail::notify(observer, MoveKind::jump, s, next, before, here.self, ev.count());
        s = std::move(next);
    }
    out.fitness = here.self;
    out.solution = std::move(s);
    out.evaluations = ev.count();
    return out;
}

/// Runs the chosen heuristic.
template <Landscape L>
SearchOutcome<solution_t<L>> run_heuristic(Heuristic h, const L& land, solution_t<L> s0, Rng& rng,
                                           const MoveObserver<solution_t<L>>& observer = {}) {
    switch (h) {
        case Heuristic::hc: return hill_climb(land, std::move(s0), rng, observer);
        case Heuristic::ss: return scuba_search(land, std::move(s0), rng, observer);
        case Heuristic::hc2: return hill_climb_two_steps(land, std::move(s0), rng, observer);
    }
    throw std::invalid_argument("run_heuristic: unknown heuristic");
}

}  // namespace scuba
