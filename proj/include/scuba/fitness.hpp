#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string_view>

namespace scuba {

/// Optimization direction of a landscape.
enum class Direction { maximize, minimize };

/// Exact integer fitness. Neutrality is integer equality, never a tolerance test.
struct Fitness {
    std::int64_t value = 0;

    constexpr Fitness() = default;
    constexpr explicit Fitness(std::int64_t v) : value(v) {}

    constexpr auto operator<=>(const Fitness&) const = default;
};

/// Strict "a is better than b" under the given direction.
constexpr bool better(Direction dir, Fitness a, Fitness b) noexcept {
    return dir == Direction::maximize ? a.value > b.value : a.value < b.value;
}

constexpr Fitness best_of(Direction dir, Fitness a, Fitness b) noexcept {
    return better(dir, b, a) ? b : a;
}

/// Best element of a nonempty multiset.
inline Fitness best_of(Direction dir, std::span<const Fitness> values) {
    if (values.empty()) {
        throw std::invalid_argument("best_of: empty set");
    }
    Fitness m = values.front();
    for (Fitness v : values) {
        if (better(dir, v, m)) {
            m = v;
        }
    }
    return m;
}

inline Fitness best_of(Direction dir, std::initializer_list<Fitness> values) {
    return best_of(dir, std::span<const Fitness>(values.begin(), values.size()));
}

constexpr Direction opposite(Direction dir) noexcept {
    return dir == Direction::maximize ? Direction::minimize : Direction::maximize;
}

constexpr std::string_view to_string(Direction dir) noexcept {
    return dir == Direction::maximize ? "maximize" : "minimize";
}

}  // namespace scuba
