#include <gtest/gtest.h>

#include <mpfr.h>

#include "oracles.hpp"
#include "supercodim/combinatorics.hpp"
#include "supercodim/errors.hpp"

using namespace supercodim;

namespace {

// |x - q| / q as a double, evaluated at 512 bits.
double relative_error(const Real& x, const Rational& q) {
    mpfr_t exact, diff;
    mpfr_inits2(512, exact, diff, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(exact, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(diff, x.get(), exact, MPFR_RNDN);
    mpfr_div(diff, diff, exact, MPFR_RNDN);
    double out = std::abs(mpfr_get_d(diff, MPFR_RNDN));
    mpfr_clears(exact, diff, static_cast<mpfr_ptr>(nullptr));
    return out;
}

Rational decimal(const char* digits, unsigned scale) {
    Rational q{Integer(digits), pow(Integer(10), scale)};
    q.canonicalize();
    return q;
}

}  // namespace

TEST(Partition, StoresPositivePartsAndPads) {
    Partition p{4, 2, 0};
    EXPECT_EQ(p.height(), 2u);
    EXPECT_EQ(p.weight(), 6u);
    EXPECT_EQ(p.padded(4), (std::vector<unsigned>{4, 2, 0, 0}));
    EXPECT_EQ(p.height(), 2u);
    EXPECT_EQ(p[5], 0u);
    EXPECT_EQ(p.to_string(), "(4,2)");
    EXPECT_EQ(Partition{}.to_string(), "()");
}

TEST(Partition, RejectsIncreasingParts) {
    EXPECT_THROW(Partition({1, 3}), PreconditionError);
    EXPECT_THROW(Partition({2, 0, 1}), PreconditionError);
}

TEST(EnumeratePartitions, Examples) {
    auto empty = enumerate_partitions(0, 3);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty.front().empty());

    auto three = enumerate_partitions(3, 2);
    EXPECT_EQ(three, (std::vector<Partition>{Partition{3}, Partition{2, 1}}));
}

TEST(EnumeratePartitions, CountsMatchDynamicProgramming) {
    for (unsigned h : {1u, 2u, 3u, 5u}) {
        EXPECT_EQ(Integer(enumerate_partitions(100, h).size()), oracle::partition_count(100, h)) << h;
    }
    for (unsigned m = 0; m <= 30; ++m) {
        EXPECT_EQ(Integer(enumerate_partitions(m, m + 1).size()), oracle::partition_count(m, m)) << m;
    }
}

TEST(EnumeratePartitions, LexicographicallyDecreasingWithoutRepeats) {
    auto all = enumerate_partitions(12, 4);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
    for (const auto& p : all) {
        EXPECT_EQ(p.weight(), 12u);
        EXPECT_LE(p.height(), 4u);
    }
}

TEST(HookDimension, Examples) {
    EXPECT_EQ(hook_dimension(Partition{7}), 1);
    EXPECT_EQ(hook_dimension(Partition{1, 1, 1, 1, 1}), 1);
    EXPECT_EQ(hook_dimension(Partition{2, 1}), 2);
    EXPECT_EQ(hook_dimension(Partition{}), 1);
}

TEST(SytOracle, ExamplesAndBound) {
    EXPECT_EQ(syt_count_oracle(Partition{2, 2}), 2);
    EXPECT_EQ(syt_count_oracle(Partition{3}), 1);
    EXPECT_EQ(syt_count_oracle(Partition{2, 1, 1}), 3);
    EXPECT_THROW(syt_count_oracle(Partition{13}), SizeError);
}

TEST(HookDimension, EqualsBacktrackingUpToWeightTen) {
    for (unsigned m = 1; m <= 10; ++m) {
        for (const auto& p : enumerate_partitions(m, m)) {
            EXPECT_EQ(hook_dimension(p), syt_count_oracle(p)) << p.to_string();
        }
    }
}

TEST(HookDimension, SquaresSumToFactorial) {
    for (unsigned k = 1; k <= 8; ++k) {
        Integer sum = 0;
        for (const auto& p : enumerate_partitions(k, k)) sum += hook_dimension(p) * hook_dimension(p);
        EXPECT_EQ(sum, factorial(k)) << k;
    }
}

TEST(PhiPower, Examples) {
    EXPECT_EQ(phi_power(Partition{9}).value, 1);
    EXPECT_EQ(phi_power(Partition{1, 1}).value, 4);
    EXPECT_EQ(phi_power(Partition{2, 1}).value, Rational(27, 4));
    EXPECT_EQ(phi_power(Partition{2, 1}).weight, 3u);
    EXPECT_THROW(phi_power(Partition{}), PreconditionError);
}

TEST(PhiPower, MatchesNaiveProduct) {
    for (unsigned m = 1; m <= 14; ++m) {
        for (const auto& nu : enumerate_partitions(m, m)) {
            Rational naive = 1;
            for (unsigned part : nu.parts()) {
                Rational ratio(m, part);
                ratio.canonicalize();
                for (unsigned e = 0; e < part; ++e) naive *= ratio;
            }
            EXPECT_EQ(phi_power(nu).value, naive) << nu.to_string();
        }
    }
}

TEST(PhiPower, DoublingSquaresThePower) {
    for (unsigned m = 1; m <= 12; ++m) {
        for (const auto& lambda : enumerate_partitions(m, m)) {
            auto doubled = phi_power(lambda.scaled(2));
            auto single = phi_power(lambda);
            EXPECT_EQ(doubled.weight, 2 * m);
            EXPECT_EQ(doubled.value, single.value * single.value) << lambda.to_string();
        }
    }
}

TEST(PhiReal, Examples) {
    const unsigned prec = 128;
    const double tol = std::ldexp(1.0, -(static_cast<int>(prec) - 2));
    EXPECT_LE(relative_error(phi_real(Partition{7, 7}, prec), 2), tol);
    EXPECT_LE(relative_error(phi_real(Partition{40, 40}, prec), 2), tol);
    EXPECT_LE(relative_error(phi_real(Partition{11}, prec), 1), tol);
    // (256/27)^{1/4}, 50 digits from an independent multiprecision evaluation.
    auto expected = decimal("17547653506033232810922918690626654068800914536078", 49);
    EXPECT_LE(relative_error(phi_real(Partition{3, 1}, prec), expected), tol);
    EXPECT_THROW(phi_real(Partition{3, 1}, 32), PreconditionError);
}

TEST(PhiReal, ErrorBoundAtSeveralPrecisions) {
    for (unsigned prec : {64u, 100u, 256u}) {
        Real r = phi_real(Partition{5, 3, 1}, prec);
        // Φ^m recovered from the real approximation.
        Rational power = phi_power(Partition{5, 3, 1}).value;
        Real back = r;
        for (int i = 1; i < 9; ++i) back = back * r;
        EXPECT_LE(relative_error(back, power), 9 * std::ldexp(1.0, -(static_cast<int>(prec) - 2)));
        EXPECT_LE(r.error_exponent(), -(static_cast<long>(prec) - 2));
    }
}

TEST(PushDown, Examples) {
    EXPECT_EQ(push_down(Partition{3, 1}, 1, 2), (Partition{2, 2}));
    EXPECT_THROW(push_down(Partition{2, 2}, 1, 2), InvalidMoveError);
    EXPECT_EQ(push_down(Partition{4, 2, 0}, 2, 3), (Partition{4, 1, 1}));
    EXPECT_THROW(push_down(Partition{3, 1}, 2, 1), InvalidMoveError);
    EXPECT_THROW(push_down(Partition{3, 1}, 1, 1), InvalidMoveError);
}

TEST(PushDown, LegalMovesPreserveWeight) {
    for (const auto& nu : enumerate_partitions(10, 4)) {
        for (const auto& rho : legal_push_downs(nu, 4)) {
            EXPECT_EQ(rho.weight(), 10u);
            EXPECT_LE(rho.height(), 4u);
        }
    }
    EXPECT_TRUE(legal_push_downs(Partition{1, 1}, 2).empty());
}

TEST(Lemma1, Examples) {
    auto single = verify_lemma1(Partition{100}, 1);
    EXPECT_TRUE(single.holds());
    EXPECT_EQ(single.dimension, 1);

    // Independent closed forms: d_(50,50) is the 50th Catalan number,
    // d_(99,1) = 99.
    const Integer m = 100;
    Integer catalan = binomial(100, 50) / 51;
    Integer self = pow(Integer(50), 50) * pow(Integer(50), 50);
    auto balanced = verify_lemma1(Partition{50, 50}, 2);
    EXPECT_EQ(balanced.dimension, catalan);
    EXPECT_EQ(balanced.self_power, self);
    EXPECT_TRUE(pow(m, 100) <= catalan * pow(m, 6) * self);
    EXPECT_TRUE(catalan * self <= pow(m, 101));
    EXPECT_TRUE(balanced.holds());

    auto hook = verify_lemma1(Partition{99, 1}, 2);
    EXPECT_EQ(hook.dimension, 99);
    EXPECT_TRUE(pow(m, 100) <= 99 * pow(m, 6) * pow(Integer(99), 99));
    EXPECT_TRUE(Integer(99) * pow(Integer(99), 99) <= pow(m, 101));
    EXPECT_TRUE(hook.holds());

    EXPECT_THROW(verify_lemma1(Partition{50, 49}, 2), PreconditionError);
    EXPECT_THROW(verify_lemma1(Partition{98, 1, 1}, 2), PreconditionError);
}

TEST(Lemma2, Examples) {
    EXPECT_TRUE(verify_lemma2(Partition{3, 1}));
    EXPECT_GE(phi_power(Partition{2, 2}).value, phi_power(Partition{3, 1}).value);
    EXPECT_EQ(phi_power(Partition{2, 2}).value, 16);
    for (unsigned m = 2; m <= 20; ++m) EXPECT_TRUE(verify_lemma2(Partition{m})) << m;
    EXPECT_TRUE(verify_lemma2(Partition{1, 1}, 2));
    EXPECT_TRUE(legal_push_downs(Partition{1, 1}, 2).empty());
}

TEST(Lemma2, ExhaustiveSmall) {
    auto result = sweep_lemma2(18, 5, 2);
    EXPECT_TRUE(result.passed());
    Integer expected = 0;
    for (unsigned m = 1; m <= 18; ++m) expected += oracle::partition_count(m, 5);
    EXPECT_EQ(Integer(result.checked), expected);
}

TEST(Stirling, Examples) {
    EXPECT_TRUE(verify_stirling_bounds(10, 5));
    // 102.4 <= 252 <= 10240
    EXPECT_EQ(binomial(10, 5), 252);
    EXPECT_LE(Rational(1024, 10), Rational(252));
    EXPECT_TRUE(verify_stirling_bounds(2, 1));
    EXPECT_TRUE(verify_stirling_bounds(300, 137));
    EXPECT_THROW(verify_stirling_bounds(5, 0), PreconditionError);
    EXPECT_THROW(verify_stirling_bounds(5, 5), PreconditionError);
}

TEST(Sweeps, WorkerCountDoesNotChangeOutcome) {
    const unsigned weights[] = {100};
    auto one = sweep_lemma1(weights, 2, 1);
    auto four = sweep_lemma1(weights, 2, 4);
    EXPECT_EQ(one.checked, four.checked);
    EXPECT_EQ(one.failures, four.failures);
    EXPECT_EQ(Integer(one.checked), oracle::partition_count(100, 2));
    EXPECT_EQ(sweep_stirling(60, 1).checked, sweep_stirling(60, 3).checked);
}
