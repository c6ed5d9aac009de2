#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <vector>

#include "pmlg/ov.hpp"

using namespace pmlg;

namespace {

// Second solver written against the raw bit vectors.
std::optional<std::pair<std::size_t, std::size_t>> reference_solve(const OvInstance& inst) {
    const auto& X = inst.xs();
    const auto& Y = inst.ys();
    for (std::size_t i = 1; i <= inst.n(); ++i) {
        for (std::size_t j = 1; j <= inst.n(); ++j) {
            bool clash = false;
            for (std::size_t h = 0; h < inst.d(); ++h) {
                if (X[i - 1].bits()[h] == 1 && Y[j - 1].bits()[h] == 1) clash = true;
            }
            if (!clash) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

} // namespace

TEST(Dot, Examples) {
    EXPECT_EQ(dot({1, 0}, {0, 1}), 0u);
    EXPECT_EQ(dot({1, 1}, {1, 0}), 1u);
    EXPECT_EQ(dot({1, 1, 0, 1}, BinaryVector::filled(4, false)), 0u);
    EXPECT_EQ(dot({1, 1, 1}, {1, 1, 1}), 3u);
}

TEST(Dot, DimensionMismatch) { EXPECT_THROW(dot({1, 0}, {1, 0, 1}), std::invalid_argument); }

TEST(BinaryVector, RejectsNonBits) {
    EXPECT_THROW(BinaryVector({0, 2}), std::invalid_argument);
    EXPECT_THROW(BinaryVector(std::vector<std::uint8_t>{3}), std::invalid_argument);
}

TEST(OvInstance, Validation) {
    EXPECT_THROW(OvInstance({}, {}), std::invalid_argument);
    EXPECT_THROW(OvInstance({{1}}, {{1}, {0}}), std::invalid_argument);
    EXPECT_THROW(OvInstance({{1, 0}}, {{1}}), std::invalid_argument);
    EXPECT_THROW(OvInstance({BinaryVector()}, {BinaryVector()}), std::invalid_argument);
}

TEST(Solver, Examples) {
    EXPECT_EQ(solve_ov_bruteforce(OvInstance({{1, 0}, {1, 1}}, {{0, 1}, {1, 1}})), (OvPair{1, 1}));
    EXPECT_FALSE(solve_ov_bruteforce(OvInstance({{1, 1}}, {{1, 0}})).has_value());
    EXPECT_EQ(solve_ov_bruteforce(OvInstance({{1, 1, 1}, {1, 1, 1}}, {{1, 0, 0}, {0, 0, 0}})), (OvPair{1, 2}));
}

TEST(Solver, LexicographicallySmallest) {
    const OvInstance inst({{1, 1}, {0, 0}}, {{1, 0}, {0, 0}});
    EXPECT_EQ(solve_ov_bruteforce(inst), (OvPair{1, 2}));
}

TEST(Solver, AgreesWithReference) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const auto d = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const auto inst = gen_ov_instance(n, d, rng(), GenMode::random);
        const auto a = solve_ov_bruteforce(inst);
        const auto b = reference_solve(inst);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
            EXPECT_EQ(a->i, b->first);
            EXPECT_EQ(a->j, b->second);
        }
    }
}

TEST(Generator, ModeGuarantees) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 1000; ++k) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const auto d = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const auto seed = rng();
        EXPECT_TRUE(reference_solve(gen_ov_instance(n, d, seed, GenMode::planted_orthogonal)).has_value());
        EXPECT_FALSE(reference_solve(gen_ov_instance(n, d, seed, GenMode::no_orthogonal)).has_value());
    }
}

TEST(Generator, Deterministic) {
    for (auto mode : {GenMode::random, GenMode::planted_orthogonal, GenMode::no_orthogonal}) {
        EXPECT_EQ(gen_ov_instance(5, 7, 42, mode), gen_ov_instance(5, 7, 42, mode));
    }
    EXPECT_NE(gen_ov_instance(5, 7, 42, GenMode::random), gen_ov_instance(5, 7, 43, GenMode::random));
}

TEST(Generator, Shape) {
    const auto inst = gen_ov_instance(6, 3, 1, GenMode::random);
    EXPECT_EQ(inst.n(), 6u);
    EXPECT_EQ(inst.d(), 3u);
    EXPECT_THROW(gen_ov_instance(0, 3, 1, GenMode::random), std::invalid_argument);
    EXPECT_THROW(gen_ov_instance(3, 0, 1, GenMode::random), std::invalid_argument);
}

TEST(GenMode, Names) {
    EXPECT_EQ(gen_mode_from_string("planted-orthogonal"), GenMode::planted_orthogonal);
    EXPECT_EQ(gen_mode_from_string("no-orthogonal"), GenMode::no_orthogonal);
    EXPECT_EQ(to_string(GenMode::random), "random");
    EXPECT_FALSE(gen_mode_from_string("planted").has_value());
}
