#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scuba/fitness.hpp"
#include "scuba/neutrality.hpp"
#include "scuba/random.hpp"

namespace scuba {

struct Site {
    int x = 0;
    int y = 0;

    auto operator<=>(const Site&) const = default;
};

constexpr int manhattan(Site a, Site b) noexcept {
    return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}

/// A tour as a concrete visiting order.
class Tour {
public:
    Tour() = default;
    explicit Tour(std::vector<int> order) : order_(std::move(order)) {}

    static Tour identity(std::size_t n) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        return Tour(std::move(order));
    }

    std::size_t size() const noexcept { return order_.size(); }
    int operator[](std::size_t k) const { return order_[k]; }
    const std::vector<int>& order() const noexcept { return order_; }

    /// Reverses positions [i, j].
    void reverse(std::size_t i, std::size_t j) {
        std::reverse(order_.begin() + static_cast<std::ptrdiff_t>(i), order_.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    }

    bool is_permutation() const {
        std::vector<char> seen(order_.size(), 0);
        for (int c : order_) {
            if (c < 0 || static_cast<std::size_t>(c) >= order_.size() || seen[static_cast<std::size_t>(c)]) {
                return false;
            }
            seen[static_cast<std::size_t>(c)] = 1;
        }
        return true;
    }

    auto operator<=>(const Tour&) const = default;

private:
    std::vector<int> order_;
};

/// 2-opt move: reverse tour positions [i, j].
struct TwoOptMove {
    std::size_t i = 0;
    std::size_t j = 0;

    auto operator<=>(const TwoOptMove&) const = default;
};

/// Canonical 2-opt moves for an N-city tour.
///
/// Every pair of non-adjacent tour edges is removed by exactly one segment
/// reversal [i, j] with 1 <= i < j <= N-1 and 2 <= j-i+1 <= N-2; reversing a
/// segment starting at 0 is the same cycle as reversing its complement, so
/// those are skipped. Yields N(N-3)/2 moves.
inline std::vector<TwoOptMove> two_opt_moves(std::size_t n) {
    if (n < 4) {
        throw std::invalid_argument("2-opt needs at least 4 cities");
    }
    std::vector<TwoOptMove> moves;
    moves.reserve(n * (n - 3) / 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const std::size_t last = std::min(n - 1, i + n - 3);
        for (std::size_t j = i + 1; j <= last; ++j) {
            moves.push_back({i, j});
        }
    }
    return moves;
}

/// Travelling salesman on a diluted L x L lattice with Manhattan distances.
class LatticeInstance {
public:
    using solution_type = Tour;

    LatticeInstance(int side, std::vector<Site> cities, std::uint64_t seed = 0)
        : side_(side), seed_(seed), cities_(std::move(cities)) {
        if (side_ < 1) {
            throw std::invalid_argument("TSPn: L must be positive");
        }
        const std::size_t n = cities_.size();
        if (n < 4) {
            throw std::invalid_argument("TSPn: need at least 4 cities for the 2-opt neighborhood");
        }
        if (n > static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_)) {
            throw std::invalid_argument("TSPn: N exceeds L^2");
        }
        std::vector<Site> sorted = cities_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < n; ++k) {
            const Site c = sorted[k];
            if (c.x < 0 || c.y < 0 || c.x >= side_ || c.y >= side_) {
                throw std::invalid_argument("TSPn: city outside the lattice");
            }
            if (k > 0 && sorted[k - 1] == c) {
                throw std::invalid_argument("TSPn: two cities on one site");
            }
        }
        dist_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                dist_[a * n + b] = manhattan(cities_[a], cities_[b]);
            }
        }
        moves_ = two_opt_moves(n);
    }

    int side() const noexcept { return side_; }
    std::size_t size() const noexcept { return cities_.size(); }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<Site>& cities() const noexcept { return cities_; }
    const std::vector<TwoOptMove>& moves() const noexcept { return moves_; }

    /// Occupation concentration N / L^2.
    double concentration() const noexcept {
        return static_cast<double>(cities_.size()) / (static_cast<double>(side_) * side_);
    }

    int distance(int a, int b) const noexcept {
        return dist_[static_cast<std::size_t>(a) * cities_.size() + static_cast<std::size_t>(b)];
    }

    Direction direction() const noexcept { return Direction::minimize; }
    std::size_t neighborhood_size() const noexcept { return moves_.size(); }

    Fitness evaluate(const Tour& t) const {
        check(t);
        const std::size_t n = t.size();
        std::int64_t len = 0;
        for (std::size_t k = 0; k < n; ++k) {
            len += distance(t[k], t[(k + 1) % n]);
        }
        return Fitness{len};
    }

    Tour neighbor(const Tour& t, std::size_t move) const {
        Tour out = t;
        out.reverse(moves_[move].i, moves_[move].j);
        return out;
    }

    /// Swaps edges (t[i-1], t[i]) and (t[j], t[j+1]) for (t[i-1], t[j]) and (t[i], t[j+1]).
    Fitness neighbor_fitness(const Tour& t, Fitness ft, std::size_t move) const {
        const std::size_t n = t.size();
        const auto [i, j] = moves_[move];
        const int a = t[i - 1];
        const int b = t[i];
        const int c = t[j];
        const int d = t[(j + 1) % n];
        return Fitness{ft.value + distance(a, c) + distance(b, d) - distance(a, b) - distance(c, d)};
    }

    Tour random_solution(Rng& rng) const {
        Tour t = Tour::identity(cities_.size());
        std::vector<int> order = t.order();
        rng.shuffle(order.begin(), order.end());
        return Tour(std::move(order));
    }

private:
    void check(const Tour& t) const {
        if (t.size() != cities_.size() || !t.is_permutation()) {
            throw std::invalid_argument("TSPn: tour is not a permutation of the cities");
        }
    }

    int side_;
    std::uint64_t seed_;
    std::vector<Site> cities_;
    std::vector<int> dist_;
    std::vector<TwoOptMove> moves_;
};

/// N distinct lattice sites drawn uniformly without replacement.
inline LatticeInstance tsp_build(int side, int n, std::uint64_t seed) {
    if (side < 1 || n < 1) {
        throw std::invalid_argument("TSPn: L and N must be positive");
    }
    const auto sites = static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
    if (static_cast<std::size_t>(n) > sites) {
        throw std::invalid_argument("TSPn: N exceeds L^2");
    }
    Rng rng(seed);
    std::vector<int> pool(sites);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<Site> cities;
    cities.reserve(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < static_cast<std::size_t>(n); ++a) {
        const std::size_t pick = a + rng.index(sites - a);
        std::swap(pool[a], pool[pick]);
        cities.push_back({pool[a] % side, pool[a] / side});
    }
    return LatticeInstance(side, std::move(cities), seed);
}

/// Mean over uniform random tours of Degn(t) / |2-opt neighborhood|.
/// The instance is built from the instance stream of `seed`, tours from its sampling stream.
inline double tsp_sample_neutral_proportion(int side, int n, std::size_t samples, std::uint64_t seed) {
    const LatticeInstance inst = tsp_build(side, n, mix_seed(seed, Stream::instance));
    Rng rng(mix_seed(seed, Stream::sampling));
    return mean_neutral_degree(inst, samples, rng) / static_cast<double>(inst.neighborhood_size());
}

// Instance file:
//   TSPN 1
//   L N seed
//   N lines "x y"
inline void write_tsp(std::ostream& out, const LatticeInstance& inst) {
    out << "TSPN 1\n" << inst.side() << ' ' << inst.size() << ' ' << inst.seed() << '\n';
    for (const Site& c : inst.cities()) {
        out << c.x << ' ' << c.y << '\n';
    }
}

inline LatticeInstance read_tsp(std::istream& in) {
    auto fail = [](const std::string& what) { return std::runtime_error("TSPn instance file: " + what); };
    std::string line;
    if (!std::getline(in, line) || line != "TSPN 1") {
        throw fail("missing 'TSPN 1' header");
    }
    int side = 0;
    long long n = 0;
    std::uint64_t seed = 0;
    if (!std::getline(in, line)) {
        throw fail("missing parameter line");
    }
    {
        std::istringstream ls(line);
        if (!(ls >> side >> n >> seed) || n < 1) {
            throw fail("malformed parameter line");
        }
    }
    std::vector<Site> cities;
    for (long long k = 0; k < n; ++k) {
        Site c;
        std::string extra;
        if (!std::getline(in, line)) {
            throw fail("truncated city list");
        }
        std::istringstream ls(line);
        if (!(ls >> c.x >> c.y) || (ls >> extra)) {
            throw fail("malformed city line");
        }
        cities.push_back(c);
    }
    return LatticeInstance(side, std::move(cities), seed);
}

}  // namespace scuba
