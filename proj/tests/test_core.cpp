#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scuba/fitness.hpp"
#include "scuba/landscape.hpp"
#include "scuba/neutrality.hpp"
#include "scuba/nkq.hpp"
#include "scuba/random.hpp"

using namespace scuba;
using scuba::oracle::BitOracle;
using scuba::oracle::FunctionLandscape;

namespace {

FunctionLandscape constant_landscape(std::size_t n, std::int64_t c = 7) {
    return FunctionLandscape(n, [c](const BitGenotype&) { return c; });
}

// Every genotype has its own fitness.
FunctionLandscape distinct_landscape(std::size_t n) {
    return FunctionLandscape(n, [](const BitGenotype& g) { return static_cast<std::int64_t>(oracle::code_of(g)); });
}

std::uint64_t code(const BitGenotype& g) { return oracle::code_of(g); }

}  // namespace

TEST(Direction, BetterIsStrict) {
    EXPECT_TRUE(better(Direction::maximize, Fitness{3}, Fitness{2}));
    EXPECT_FALSE(better(Direction::maximize, Fitness{2}, Fitness{2}));
    EXPECT_TRUE(better(Direction::minimize, Fitness{2}, Fitness{3}));
    EXPECT_FALSE(better(Direction::minimize, Fitness{3}, Fitness{3}));
}

TEST(Direction, BestOfIsNotBeaten) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Fitness> xs(1 + rng.index(20));
        for (auto& x : xs) {
            x = Fitness{static_cast<std::int64_t>(rng.below(10))};
        }
        for (Direction dir : {Direction::maximize, Direction::minimize}) {
            const Fitness m = best_of(dir, std::span<const Fitness>(xs));
            EXPECT_TRUE(std::find(xs.begin(), xs.end(), m) != xs.end());
            for (Fitness x : xs) {
                EXPECT_FALSE(better(dir, x, m));
            }
        }
    }
    EXPECT_THROW(best_of(Direction::maximize, std::span<const Fitness>{}), std::invalid_argument);
}

TEST(Random, BelowStaysInRangeAndIsReproducible) {
    Rng a(99), b(99);
    for (int i = 0; i < 1000; ++i) {
        const auto bound = 1 + static_cast<std::uint64_t>(i % 37);
        const auto x = a.below(bound);
        EXPECT_LT(x, bound);
        EXPECT_EQ(x, b.below(bound));
    }
    EXPECT_THROW(a.below(0), std::invalid_argument);
}

TEST(Random, BelowIsRoughlyUniform) {
    Rng rng(3);
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; ++i) {
        ++counts[rng.index(6)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 500);
    }
}

TEST(Random, RunSeedsAreDistinct) {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seeds.insert(derive_run_seed(42, i));
    }
    EXPECT_EQ(seeds.size(), 1000U);
    EXPECT_EQ(derive_run_seed(42, 7), derive_run_seed(42, 7));
    EXPECT_NE(derive_run_seed(42, 7), derive_run_seed(43, 7));
    EXPECT_NE(mix_seed(1, Stream::instance), mix_seed(1, Stream::sampling));
}

TEST(Evol, ConstantLandscape) {
    const auto land = constant_landscape(5, 11);
    Evaluator ev(land);
    for (const auto& g : oracle::all_genotypes(5)) {
        EXPECT_EQ(evol(ev, g), Fitness{11});
    }
}

TEST(Evol, StrictGlobalOptimumIsItsOwnEvol) {
    const auto land = distinct_landscape(6);
    Evaluator ev(land);
    const auto top = BitGenotype::from_code(63, 6);
    EXPECT_EQ(evol(ev, top), land.evaluate(top));
}

TEST(Evol, MatchesBruteForceOnSmallNkq) {
    const auto inst = nkq_build({3, 0, 3, LinkKind::random, 17});
    const BitOracle oracle = oracle::oracle_for(inst);
    Evaluator ev(inst);
    for (const auto& g : oracle::all_genotypes(3)) {
        EXPECT_EQ(evol(ev, g).value, oracle.evol(code(g)));
    }
}

TEST(Evol, CountsOnePlusNeighborhood) {
    const auto inst = nkq_build({10, 2, 2, LinkKind::random, 1});
    Evaluator ev(inst);
    Rng rng(1);
    const auto g = inst.random_solution(rng);
    evol(ev, g);
    EXPECT_EQ(ev.count(), 11U);
    evol(ev, g);
    EXPECT_EQ(ev.count(), 22U);
}

TEST(NeutralNeighbors, ConstantYieldsAllFlips) {
    const auto land = constant_landscape(4);
    Evaluator ev(land);
    const auto g = BitGenotype::from_string("0110");
    const auto nn = neutral_neighbors(ev, g);
    EXPECT_EQ(nn, neighbors(land, g));
    EXPECT_EQ(nn.size(), 4U);
}

TEST(NeutralNeighbors, DistinctYieldsNothing) {
    const auto land = distinct_landscape(5);
    Evaluator ev(land);
    for (const auto& g : oracle::all_genotypes(5)) {
        EXPECT_TRUE(neutral_neighbors(ev, g).empty());
    }
}

TEST(NeutralNeighbors, MatchesBruteForceFilter) {
    const auto inst = nkq_build({6, 0, 2, LinkKind::random, 23});
    const BitOracle oracle = oracle::oracle_for(inst);
    Evaluator ev(inst);
    for (const auto& g : oracle::all_genotypes(6)) {
        std::set<std::uint64_t> got;
        for (const auto& nb : neutral_neighbors(ev, g)) {
            got.insert(code(nb));
        }
        const auto want = oracle.neutral(code(g));
        EXPECT_EQ(got, std::set<std::uint64_t>(want.begin(), want.end()));
    }
}

TEST(NeutralDegree, ConstantAndDistinct) {
    const auto flat = constant_landscape(64);
    Evaluator ev(flat);
    Rng rng(4);
    EXPECT_EQ(neutral_degree(ev, flat.random_solution(rng)), 64U);

    const auto land = distinct_landscape(8);
    Evaluator ev2(land);
    for (const auto& g : oracle::all_genotypes(8)) {
        EXPECT_EQ(neutral_degree(ev2, g), 0U);
    }
}

TEST(NeutralDegree, NoEpistasisCountsEqualTableEntries) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto inst = nkq_build({12, 0, 2, LinkKind::random, seed});
        std::size_t equal_loci = 0;
        for (const auto& table : inst.tables()) {
            equal_loci += table[0] == table[1] ? 1 : 0;
        }
        Evaluator ev(inst);
        Rng rng(seed);
        for (int i = 0; i < 50; ++i) {
            EXPECT_EQ(neutral_degree(ev, inst.random_solution(rng)), equal_loci);
        }
    }
}

TEST(IsLocal, OptimumAndConstant) {
    const auto land = distinct_landscape(5);
    const auto top = BitGenotype::from_code(31, 5);
    auto f = [&](const BitGenotype& g) { return land.evaluate(g); };
    auto v = [&](const BitGenotype& g) { return neighbors(land, g); };
    EXPECT_TRUE(is_local(land, top, f, v));
    EXPECT_FALSE(is_local(land, BitGenotype::from_code(3, 5), f, v));

    const auto flat = constant_landscape(5);
    auto g = [&](const BitGenotype& s) { return flat.evaluate(s); };
    auto w = [&](const BitGenotype& s) { return neighbors(flat, s); };
    for (const auto& s : oracle::all_genotypes(5)) {
        EXPECT_TRUE(is_local(flat, s, g, w));
    }
}

TEST(IsLocal, LocalOptimaCensusMatchesBruteForce) {
    const auto inst = nkq_build({8, 2, 3, LinkKind::random, 31});
    const BitOracle oracle = oracle::oracle_for(inst);
    auto f = [&](const BitGenotype& g) { return inst.evaluate(g); };
    auto v = [&](const BitGenotype& g) { return neighbors(inst, g); };
    std::size_t optima = 0;
    for (const auto& g : oracle::all_genotypes(8)) {
        const bool local = is_local(inst, g, f, v);
        EXPECT_EQ(local, oracle.local_max(code(g)));
        optima += local ? 1 : 0;
    }
    EXPECT_GT(optima, 0U);
}

TEST(IsLocalNeutral, VacuousAndConstant) {
    const auto land = distinct_landscape(6);
    Evaluator ev(land);
    for (const auto& g : oracle::all_genotypes(6)) {
        EXPECT_TRUE(is_local_neutral(ev, g));
    }
    const auto flat = constant_landscape(6);
    Evaluator ev2(flat);
    for (const auto& g : oracle::all_genotypes(6)) {
        EXPECT_TRUE(is_local_neutral(ev2, g));
    }
}

TEST(IsLocalNeutral, MatchesBruteForce) {
    const auto inst = nkq_build({6, 1, 2, LinkKind::random, 8});
    const BitOracle oracle = oracle::oracle_for(inst);
    Evaluator ev(inst);
    std::size_t not_local = 0;
    for (const auto& g : oracle::all_genotypes(6)) {
        const bool got = is_local_neutral(ev, g);
        EXPECT_EQ(got, oracle.local_neutral(code(g)));
        not_local += got ? 0 : 1;
    }
    EXPECT_GT(not_local, 0U) << "instance should exercise the non-vacuous branch";
}

TEST(ExtendedNeighbors, IsTheRadiusTwoBall) {
    const auto inst = nkq_build({6, 1, 2, LinkKind::random, 2});
    for (const auto& g : oracle::all_genotypes(6)) {
        const auto ext = extended_neighbors(inst, g);
        EXPECT_EQ(ext.size(), 6U + 15U);
        auto ball = oracle::hamming_ball(g, 2);
        std::sort(ball.begin(), ball.end());
        EXPECT_EQ(ext, ball);
        for (const auto& nb : neighbors(inst, g)) {
            EXPECT_TRUE(std::binary_search(ext.begin(), ext.end(), nb));
        }
    }
    const auto small = nkq_build({4, 0, 2, LinkKind::random, 2});
    EXPECT_EQ(extended_neighbors(small, BitGenotype(4)).size(), 10U);
}

TEST(Evol2, ConstantAndDistanceTwoOptimum) {
    const auto flat = constant_landscape(5, 3);
    Evaluator ev(flat);
    EXPECT_EQ(evol2(ev, BitGenotype(5)), Fitness{3});

    // Single peak two flips away from the all-zero genotype.
    const auto target = BitGenotype::from_string("110000");
    const auto peak = FunctionLandscape(6, [&](const BitGenotype& g) {
        return g == target ? std::int64_t{100} : std::int64_t{0};
    });
    Evaluator ev2(peak);
    EXPECT_EQ(evol2(ev2, BitGenotype(6)), Fitness{100});
    EXPECT_EQ(evol(ev2, BitGenotype(6)), Fitness{0});
}

TEST(Evol2, MatchesBruteForce) {
    const auto inst = nkq_build({6, 2, 3, LinkKind::random, 12});
    const BitOracle oracle = oracle::oracle_for(inst);
    Evaluator ev(inst);
    for (const auto& g : oracle::all_genotypes(6)) {
        EXPECT_EQ(evol2(ev, g).value, oracle.evol2(code(g)));
    }
}

// Exhaustive agreement of every primitive on small instances.
class SmallNkqSweep : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(SmallNkqSweep, AllPrimitivesAgreeWithOracles) {
    const auto [n, k, q] = GetParam();
    const auto inst = nkq_build({n, k, q, LinkKind::random, static_cast<std::uint64_t>(n * 100 + k * 10 + q)});
    const BitOracle oracle = oracle::oracle_for(inst);
    Evaluator ev(inst);
    auto f = [&](const BitGenotype& g) { return inst.evaluate(g); };
    auto v = [&](const BitGenotype& g) { return neighbors(inst, g); };
    for (const auto& g : oracle::all_genotypes(static_cast<std::size_t>(n))) {
        const auto c = code(g);
        const Fitness e = evol(ev, g);
        const Fitness e2 = evol2(ev, g);
        ASSERT_EQ(inst.evaluate(g).value, oracle.fit(c));
        ASSERT_EQ(e.value, oracle.evol(c));
        ASSERT_EQ(e2.value, oracle.evol2(c));
        ASSERT_EQ(neutral_degree(ev, g), oracle.neutral(c).size());
        ASSERT_EQ(is_local(inst, g, f, v), oracle.local_max(c));
        ASSERT_EQ(is_local_neutral(ev, g), oracle.local_neutral(c));
        // Ordering properties.
        ASSERT_FALSE(better(Direction::maximize, inst.evaluate(g), e));
        ASSERT_FALSE(better(Direction::maximize, e, e2));
        ASSERT_EQ(is_local(inst, g, f, v), e == inst.evaluate(g));
    }
}

INSTANTIATE_TEST_SUITE_P(Exhaustive, SmallNkqSweep,
                         ::testing::Values(std::tuple{4, 0, 2}, std::tuple{5, 1, 3}, std::tuple{6, 2, 2},
                                           std::tuple{7, 3, 3}, std::tuple{8, 5, 2}));

TEST(Mirror, EvolFlipsWithDirection) {
    const auto inst = nkq_build({8, 2, 3, LinkKind::random, 77});
    const oracle::Mirrored<NkqInstance> mirror(inst);
    Evaluator ev(inst);
    Evaluator evm(mirror);
    for (const auto& g : oracle::all_genotypes(8)) {
        EXPECT_EQ(evol(evm, g).value, -evol(ev, g).value);
        EXPECT_EQ(neutral_degree(evm, g), neutral_degree(ev, g));
        EXPECT_EQ(is_local_neutral(evm, g), is_local_neutral(ev, g));
    }
}
