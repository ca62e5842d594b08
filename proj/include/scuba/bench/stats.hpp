#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "scuba/fitness.hpp"

namespace scuba::bench {

/// Per-run result with the solution dropped.
struct RunResult {
    std::uint64_t run = 0;
    std::uint64_t seed = 0;
    Fitness initial;
    Fitness final;
    std::uint64_t steps = 0;
    std::uint64_t flat_count = 0;
    std::uint64_t gate_count = 0;
    std::uint64_t evaluations = 0;

    bool operator==(const RunResult&) const = default;
};

/// Fitness statistics in reporting units (raw value times `scale`).
struct AggregateStats {
    std::size_t runs = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample estimator, divisor runs - 1; 0 for a single run
    Fitness best;
    double best_scaled = 0.0;
    double mean_evaluations = 0.0;
    double mean_steps = 0.0;
    double mean_flat = 0.0;
    double mean_gate = 0.0;

    bool operator==(const AggregateStats&) const = default;
};

/// Sums are exact integers, so the result does not depend on the order of `results`.
inline AggregateStats aggregate(std::span<const RunResult> results, Direction dir, double scale = 1.0) {
    if (results.empty()) {
        throw std::invalid_argument("aggregate: no outcomes");
    }
    __int128 sum = 0;
    __int128 sum_sq = 0;
    std::uint64_t evals = 0;
    std::uint64_t steps = 0;
    std::uint64_t flat = 0;
    std::uint64_t gate = 0;
    Fitness best = results.front().final;
    for (const RunResult& r : results) {
        sum += r.final.value;
        sum_sq += static_cast<__int128>(r.final.value) * r.final.value;
        evals += r.evaluations;
        steps += r.steps;
        flat += r.flat_count;
        gate += r.gate_count;
        best = best_of(dir, best, r.final);
    }
    const auto n = static_cast<__int128>(results.size());
    const double dn = static_cast<double>(results.size());
    AggregateStats s;
    s.runs = results.size();
    s.mean = static_cast<double>(sum) / dn * scale;
    if (results.size() > 1) {
        // n * sum(x^2) - (sum x)^2 = n(n-1) * variance, computed exactly.
        const __int128 numer = n * sum_sq - sum * sum;
        const double variance = static_cast<double>(numer) / (dn * (dn - 1.0));
        s.stddev = std::sqrt(variance) * scale;
    }
    s.best = best;
    s.best_scaled = static_cast<double>(best.value) * scale;
    s.mean_evaluations = static_cast<double>(evals) / dn;
    s.mean_steps = static_cast<double>(steps) / dn;
    s.mean_flat = static_cast<double>(flat) / dn;
    s.mean_gate = static_cast<double>(gate) / dn;
    return s;
}

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // sample variance
    std::size_t count = 0;
};

inline Moments moments(std::span<const double> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("moments: empty sample");
    }
    Moments m;
    m.count = xs.size();
    for (double x : xs) {
        m.mean += x;
    }
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        for (double x : xs) {
            m.variance += (x - m.mean) * (x - m.mean);
        }
        m.variance /= static_cast<double>(xs.size() - 1);
    }
    return m;
}

struct WelchTest {
    double t = 0.0;
    double df = 0.0;
    double p_greater = 1.0;  // one-sided p-value for mean(a) > mean(b)
};

/// Welch's unequal-variance two-sample t test.
inline WelchTest welch_test(std::span<const double> a, std::span<const double> b) {
    const Moments ma = moments(a);
    const Moments mb = moments(b);
    if (ma.count < 2 || mb.count < 2) {
        throw std::invalid_argument("welch_test: need at least two observations per sample");
    }
    const double va = ma.variance / static_cast<double>(ma.count);
    const double vb = mb.variance / static_cast<double>(mb.count);
    WelchTest out;
    const double se = std::sqrt(va + vb);
    if (se == 0.0) {
        out.t = ma.mean > mb.mean ? INFINITY : (ma.mean < mb.mean ? -INFINITY : 0.0);
        out.df = static_cast<double>(ma.count + mb.count - 2);
        out.p_greater = ma.mean > mb.mean ? 0.0 : 1.0;
        return out;
    }
    out.t = (ma.mean - mb.mean) / se;
    out.df = (va + vb) * (va + vb) /
             (va * va / static_cast<double>(ma.count - 1) + vb * vb / static_cast<double>(mb.count - 1));
    const boost::math::students_t dist(out.df);
    out.p_greater = boost::math::cdf(boost::math::complement(dist, out.t));
    return out;
}

}  // namespace scuba::bench
