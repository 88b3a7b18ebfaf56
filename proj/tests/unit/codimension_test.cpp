#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "supercodim/codimension.hpp"
#include "supercodim/errors.hpp"

using namespace supercodim;

namespace {

// c_{k,n-k} for k = 0..n, from tests/oracles/free_codimensions.py
// (all bracket trees evaluated on matrix realizations, sympy rank).
const std::vector<std::vector<std::size_t>> kOsp12Frozen = {
    {1, 1}, {1, 1, 1}, {2, 2, 2, 2}, {3, 3, 4, 4, 6}};
const std::vector<std::size_t> kSl2Frozen = {1, 1, 2, 6, 14};

}  // namespace

TEST(EvaluationMatrix, ShapeAndEntries) {
    auto osp = builtin("osp12");
    auto m = evaluation_matrix(osp, 2, 1);
    EXPECT_EQ(m.values.rows(), 2u);
    EXPECT_EQ(m.values.cols(), 3u * 3u * 2u * 5u);
    EXPECT_EQ(m.tuples.size(), 18u);
    EXPECT_EQ(evaluation_matrix_entries(osp, 2, 1), 2u * 90u);
    // Last variable fastest.
    EXPECT_EQ(m.tuples[0], (std::vector<std::size_t>{0, 0, 3}));
    EXPECT_EQ(m.tuples[1], (std::vector<std::size_t>{0, 0, 4}));
    EXPECT_EQ(m.tuples[2], (std::vector<std::size_t>{0, 1, 3}));
    for (std::size_t r = 0; r < m.monomials.size(); ++r) {
        auto tree = BracketTree::left_normed(m.monomials[r].slots);
        for (std::size_t t = 0; t < m.tuples.size(); ++t) {
            Substitution sub{{Slot::x(1), osp.basis_vector(m.tuples[t][0])},
                             {Slot::x(2), osp.basis_vector(m.tuples[t][1])},
                             {Slot::y(1), osp.basis_vector(m.tuples[t][2])}};
            auto v = oracle::tree_value(tree, sub, osp);
            for (std::size_t l = 0; l < 5; ++l) EXPECT_EQ(m.values(r, t * 5 + l), v[l]);
        }
    }
}

TEST(EvaluationMatrix, Examples) {
    EXPECT_TRUE(evaluation_matrix(builtin("abelian:2:1"), 1, 1).values.is_zero());
    EXPECT_TRUE(evaluation_matrix(builtin("abelian:2:1"), 3, 0).values.is_zero());

    auto sl2 = evaluation_matrix(builtin("sl2"), 1, 0);
    EXPECT_EQ(sl2.values.rows(), 1u);
    EXPECT_EQ(sl2.values.cols(), 9u);
    EXPECT_EQ(rank_exact(sl2), 1u);

    // P_{0,2} has the single spanning word [y1,y2]: the matrix has rank 1,
    // while its values [b_i, b_j] over the odd basis span all of L_0.
    auto osp = builtin("osp12");
    auto odd = evaluation_matrix(osp, 0, 2);
    EXPECT_EQ(rank_exact(odd), 1u);
    std::vector<Vector> values;
    for (std::size_t t = 0; t < odd.tuples.size(); ++t) {
        Vector v(5);
        for (std::size_t l = 0; l < 5; ++l) v[l] = odd.values(0, t * 5 + l);
        values.push_back(v);
    }
    EXPECT_EQ(Subspace(5, values), Subspace::coordinate(5, {0, 1, 2}));
}

TEST(EvaluationMatrix, ResourceGuard) {
    ComputeOptions tiny;
    tiny.max_entries = 100;
    try {
        evaluation_matrix(builtin("osp12"), 2, 2, tiny);
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_NE(std::string(e.what()).find("1080"), std::string::npos) << e.what();
    }
    EXPECT_THROW(partial_codimension(builtin("osp12"), 2, 2, tiny), ResourceError);
    EXPECT_THROW(evaluation_matrix(builtin("osp12"), 0, 0), PreconditionError);
}

TEST(EvaluationMatrix, WorkerCountInvariant) {
    auto osp = builtin("osp12");
    ComputeOptions four;
    four.workers = 4;
    for (unsigned k = 0; k <= 4; ++k) {
        auto a = evaluation_matrix(osp, k, 4 - k);
        auto b = evaluation_matrix(osp, k, 4 - k, four);
        for (std::size_t r = 0; r < a.values.rows(); ++r) EXPECT_EQ(a.values.row(r), b.values.row(r));
    }
}

TEST(PartialCodimension, RankInvariantUnderTupleOrder) {
    auto osp = builtin("osp12");
    std::mt19937_64 rng(9);
    for (unsigned k = 0; k <= 3; ++k) {
        auto m = evaluation_matrix(osp, k, 3 - k);
        std::vector<std::size_t> perm(m.tuples.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        RationalMatrix shuffled(m.values.rows(), m.values.cols());
        for (std::size_t r = 0; r < m.values.rows(); ++r) {
            for (std::size_t t = 0; t < perm.size(); ++t) {
                for (std::size_t l = 0; l < 5; ++l) shuffled(r, t * 5 + l) = m.values(r, perm[t] * 5 + l);
            }
        }
        EXPECT_EQ(rank_exact(shuffled), rank_exact(m));
    }
}

TEST(PartialCodimension, MatchesAllTreesOracle) {
    auto osp = builtin("osp12");
    auto sl2 = builtin("sl2");
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            EXPECT_EQ(partial_codimension(osp, k, n - k), oracle::all_trees_dimension(osp, k, n - k));
            EXPECT_EQ(partial_codimension(sl2, k, n - k), oracle::all_trees_dimension(sl2, k, n - k));
        }
    }
}

TEST(PartialCodimension, MatchesFrozenPythonOracle) {
    auto osp = builtin("osp12");
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(partial_codimension(osp, k, n - k), kOsp12Frozen[n - 1][k]);
    }
    auto sl2 = builtin("sl2");
    for (unsigned n = 1; n <= 5; ++n) {
        EXPECT_EQ(partial_codimension(sl2, n, 0), kSl2Frozen[n - 1]);
        for (unsigned j = 1; j <= n; ++j) EXPECT_EQ(partial_codimension(sl2, n - j, j), 0u);
    }
}

TEST(TotalCodimension, Examples) {
    EXPECT_EQ(total_codimension(builtin("abelian:2:1"), 2), 0);
    EXPECT_EQ(total_codimension(builtin("abelian:2:1"), 1), 2);
    EXPECT_EQ(total_codimension(builtin("osp12"), 1), 2);
    EXPECT_EQ(total_codimension(builtin("osp12"), 4), 61);
    EXPECT_EQ(total_codimension(builtin("sl2"), 5), 14);
}

TEST(Trace, IdentityIsDimensionAndAbelianIsZero) {
    auto osp = builtin("osp12");
    for (unsigned k = 0; k <= 3; ++k) {
        auto t = trace_on_quotient(osp, k, 3 - k);
        EXPECT_EQ(t.at({CycleType::identity(k), CycleType::identity(3 - k)}),
                  Rational(partial_codimension(osp, k, 3 - k)));
    }
    for (const auto& [pair, value] : trace_on_quotient(builtin("abelian:2:2"), 2, 1)) EXPECT_EQ(value, 0);
}

TEST(Trace, ClassFunctionOnEveryElement) {
    // Every element of S_2 x S_2 acting on P_{2,2}(osp12): the trace computed
    // by brute force on the quotient basis depends only on the cycle types.
    auto osp = builtin("osp12");
    auto t = trace_on_quotient(osp, 2, 2);
    EXPECT_EQ(t.size(), 4u);
    Rational sum = 0;
    for (const auto& [pair, value] : t) sum += Rational(pair.first.class_size() * pair.second.class_size()) * value;
    // Σ |class| trace / |G| is the multiplicity of the trivial constituent.
    sum /= 4;
    EXPECT_EQ(sum.get_den(), 1);
}

TEST(Cocharacter, Examples) {
    EXPECT_TRUE(cocharacter(builtin("abelian:2:1"), 1, 1).empty());
    EXPECT_EQ(colength(builtin("abelian:2:1"), 3), 0);
    for (const char* name : {"sl2", "osp12"}) {
        auto lines = cocharacter(builtin(name), 1, 0);
        ASSERT_EQ(lines.size(), 1u) << name;
        EXPECT_EQ(lines[0], (CocharacterLine{Partition{1}, Partition{}, 1}));
    }
}

TEST(Cocharacter, CharacterSumEqualsRankForOsp12AndSl2) {
    for (const char* name : {"sl2", "osp12"}) {
        auto a = builtin(name);
        for (unsigned n = 1; n <= 4; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                auto check = verify_eq3(a, k, n - k);
                EXPECT_TRUE(check.holds) << name << " " << k << "," << n - k;
                EXPECT_EQ(check.character_sum, Integer(check.codimension));
            }
        }
    }
    auto ab = verify_eq3(builtin("abelian:1:1"), 1, 1);
    EXPECT_TRUE(ab.holds);
    EXPECT_EQ(ab.codimension, 0u);
}

TEST(Cocharacter, Sl2KnownDecomposition) {
    // sl2 at n = 3: P_3(sl2) is the 2-dimensional irreducible of S_3.
    auto lines = cocharacter(builtin("sl2"), 3, 0);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0].lambda, (Partition{2, 1}));
    EXPECT_EQ(lines[0].multiplicity, 1);
}

TEST(Monotonicity, Examples) {
    auto osp = verify_monotonicity(builtin("osp12"), 4);
    EXPECT_TRUE(osp.holds);
    EXPECT_FALSE(osp.outside_hypothesis);

    auto heis = verify_monotonicity(builtin("heisenberg"), 4);
    EXPECT_TRUE(heis.outside_hypothesis);
    // c_3 = 0 < c_2 = 1 for Heisenberg.
    EXPECT_FALSE(heis.holds);
    EXPECT_FALSE(heis.failures.empty());
}

TEST(Table, InvariantsAndWorkerInvariance) {
    auto osp = builtin("osp12");
    auto table = codimension_table(osp, 1, 4, true);
    EXPECT_TRUE(check_table_invariants(table).empty());
    ComputeOptions many;
    many.workers = 3;
    auto again = codimension_table(osp, 1, 4, true, many);
    ASSERT_EQ(table.rows.size(), again.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        EXPECT_EQ(table.rows[i].total, again.rows[i].total);
        EXPECT_EQ(table.rows[i].total_colength, again.rows[i].total_colength);
        for (std::size_t k = 0; k < table.rows[i].partials.size(); ++k) {
            EXPECT_EQ(table.rows[i].partials[k].lines, again.rows[i].partials[k].lines);
        }
    }
    const unsigned d = 5;
    for (const auto& row : table.rows) {
        EXPECT_LE(row.total, pow(Integer(d), row.n));
        Integer sum = 0;
        for (const auto& p : row.partials) {
            sum += binomial(row.n, p.k) * p.codimension;
            for (const auto& line : *p.lines) {
                EXPECT_LE(binomial(row.n, p.k) * hook_dimension(line.lambda) * hook_dimension(line.mu), row.total);
                EXPECT_LE(line.lambda.height(), d);
                EXPECT_LE(line.mu.height(), d);
                EXPECT_GE(line.multiplicity, 1);
            }
        }
        EXPECT_EQ(sum, row.total);
    }
}

TEST(Table, InvariantCheckCatchesCorruption) {
    auto table = codimension_table(builtin("osp12"), 1, 2, true);
    table.rows[1].total += 1;
    EXPECT_FALSE(check_table_invariants(table).empty());
}
