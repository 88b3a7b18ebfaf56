#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "supercodim/errors.hpp"
#include "supercodim/linalg.hpp"

using namespace supercodim;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_hint) {
    // Product of random rows x rank_hint and rank_hint x cols factors, so the
    // rank is at most rank_hint and usually equal to it.
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> denom(1, 3);
    RationalMatrix left(rows, rank_hint), right(rank_hint, cols), out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < rank_hint; ++j) left(i, j) = Rational(coeff(rng), denom(rng));
    }
    for (std::size_t i = 0; i < rank_hint; ++i) {
        for (std::size_t j = 0; j < cols; ++j) right(i, j) = Rational(coeff(rng), denom(rng));
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Rational s = 0;
            for (std::size_t t = 0; t < rank_hint; ++t) s += left(i, t) * right(t, j);
            out(i, j) = s;
        }
    }
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j).canonicalize();
    return out;
}

std::vector<Vector> rows_of(const RationalMatrix& m) {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
    return out;
}

}  // namespace

TEST(Rank, Examples) {
    EXPECT_EQ(rank_exact(RationalMatrix(4, 6)), 0u);
    EXPECT_EQ(rank_exact(RationalMatrix()), 0u);
    RationalMatrix id(3, 5);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    EXPECT_EQ(rank_exact(id), 3u);
    EXPECT_EQ(rank_exact(id.transposed()), 3u);
}

TEST(Rank, AgreesWithReversedPivotOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, r = 1 + rng() % 6;
        auto m = random_matrix(rng, rows, cols, r);
        std::size_t expected = oracle::rank(rows_of(m));
        EXPECT_EQ(rank_exact(m), expected);
        EXPECT_EQ(rank_exact(m, {.modular_check = false}), expected);
        EXPECT_EQ(rank_exact(m.transposed()), expected);
        EXPECT_EQ(reduced_row_echelon(rows_of(m), cols).rows.size(), expected);
    }
}

TEST(Rank, ModularPrimesArePrimeAndDistinct) {
    for (auto p : kRankPrimes) EXPECT_TRUE(oracle::is_prime(p)) << p;
    EXPECT_NE(kRankPrimes[0], kRankPrimes[1]);
    EXPECT_NE(kRankPrimes[1], kRankPrimes[2]);
    EXPECT_NE(kRankPrimes[0], kRankPrimes[2]);
}

TEST(Rank, ModularRankDropsOnlyAtDividingPrime) {
    // det = p for the first prime, so the matrix is singular mod p only.
    const std::uint32_t p = kRankPrimes[0];
    RationalMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 0;
    m(1, 0) = 0;
    m(1, 1) = Rational(p);
    EXPECT_EQ(rank_mod_prime(m, p), 1u);
    EXPECT_EQ(rank_mod_prime(m, kRankPrimes[1]), 2u);
    EXPECT_EQ(rank_exact(m), 2u);
}

TEST(RowEchelon, CanonicalForSameSpan) {
    std::vector<Vector> a{{1, 2, 3}, {2, 4, 7}};
    std::vector<Vector> b{{0, 0, 1}, {3, 6, 9}};
    auto ea = reduced_row_echelon(a, 3);
    auto eb = reduced_row_echelon(b, 3);
    EXPECT_EQ(ea.rows, eb.rows);
    EXPECT_EQ(ea.pivots, (std::vector<std::size_t>{0, 2}));
}

TEST(Subspace, Operations) {
    Subspace s(3, {{1, 1, 0}});
    Subspace t(3, {{0, 1, 1}});
    EXPECT_EQ(s.dimension(), 1u);
    EXPECT_TRUE(s.contains(Vector{2, 2, 0}));
    EXPECT_FALSE(s.contains(Vector{1, 0, 0}));
    auto sum = s + t;
    EXPECT_EQ(sum.dimension(), 2u);
    EXPECT_TRUE(sum.contains(s));
    EXPECT_FALSE(s.contains(sum));
    EXPECT_TRUE(Subspace::zero(3).is_zero());
    EXPECT_TRUE(Subspace::full(3).is_full());
    EXPECT_EQ(Subspace::coordinate(3, {0, 2}), Subspace(3, {{1, 0, 0}, {0, 0, 5}}));
    EXPECT_EQ(s + s, s);
}

TEST(NullSpace, KernelIsAnnihilated) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(rng, 4, 7, 1 + trial % 4);
        auto kernel = null_space(m);
        EXPECT_EQ(kernel.dimension() + rank_exact(m), 7u);
        for (const auto& v : kernel.basis()) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Rational s = 0;
                for (std::size_t c = 0; c < 7; ++c) s += m(r, c) * v[c];
                EXPECT_EQ(s, 0);
            }
        }
    }
}
