/**
 * @file test_loop_schur.cpp
 * @brief Loop (skew) Schur functions: brute-force tableau enumeration as the
 *        oracle for the column DP and Jacobi-Trudi, the worked (4,2) example,
 *        Maya index sets and the shape / Q-invariants.
 */
#include <gtest/gtest.h>

#include "lsym/crystal.hpp"
#include "lsym/loop_schur.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

/** x_a^(c) = x(a, c - a + 1 mod n): the colored variable attached to entry a in a cell of color c. */
Poly colored(int a, int c, int n) { return Poly::loop(a, mod1(static_cast<long>(c) - a + 1, n)); }

/** Sum of weights over every filling with entries in [1, m] that is a semistandard tableau. */
Poly brute_force_schur(const ColoredSkewShape& s, int m) {
    auto cells = s.cells();
    std::map<std::pair<int, int>, int> fill;
    Poly total;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == cells.size()) {
            Poly w(1);
            for (auto [i, j] : cells) w *= colored(fill[{i, j}], s.color(i, j), s.n);
            total += w;
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 1; v <= m; ++v) {
            if (s.contains_cell(i, j - 1) && fill[{i, j - 1}] > v) continue;
            if (s.contains_cell(i - 1, j) && fill[{i - 1, j}] >= v) continue;
            fill[{i, j}] = v;
            go(k + 1);
        }
    };
    go(0);
    return total;
}

TEST(LoopSchur, WorkedExampleFourTwo) {
    const int n = 4;
    auto x = symbolic_point(2, n);
    auto c = [&](int i, int r) { return colored(i, r, n); };
    Poly want = c(1, 1) * c(1, 2) * c(1, 3) * c(1, 4) * c(2, 1) * c(2, 2) + c(1, 1) * c(1, 3) * c(1, 4) * c(2, 1) * c(2, 2) * c(2, 2) +
                c(1, 1) * c(1, 4) * c(2, 1) * c(2, 2) * c(2, 2) * c(2, 3);
    ColoredSkewShape s(Partition{4, 2}, Partition{}, 1, n);
    EXPECT_EQ(ssyt_sum(s, x), want);
    EXPECT_EQ(brute_force_schur(s, 2), want);
    auto E = [&](int k, int r) { return loop_E(x, k, r); };
    Matrix<Poly> A(4, 4);
    A(1, 1) = E(2, 1);
    A(2, 1) = E(1, 1), A(2, 2) = E(2, 4);
    A(3, 2) = Poly(1), A(3, 3) = E(1, 3), A(3, 4) = E(2, 2);
    A(4, 3) = Poly(1), A(4, 4) = E(1, 2);
    EXPECT_EQ(det(A), want);
    EXPECT_EQ(jacobi_trudi(s, x), want);
}

TEST(LoopSchur, ElementaryAndCompleteAreColumnsAndRows) {
    for (int n = 1; n <= 3; ++n) {
        auto x = symbolic_point(3, n);
        for (int k = 0; k <= 3; ++k)
            for (int r = 1; r <= n; ++r) {
                EXPECT_EQ(loop_E(x, k, r), brute_force_schur(ColoredSkewShape(Partition(std::vector<int>(k, 1)), Partition{}, r, n), 3));
                EXPECT_EQ(loop_H(x, k, r), brute_force_schur(ColoredSkewShape(Partition{k}, Partition{}, r, n), 3));
            }
    }
}

TEST(LoopSchur, DPAndJacobiTrudiMatchBruteForce) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            auto x = symbolic_point(m, n);
            for (const auto& s : skew_corpus(3, 3, n)) {
                Poly want = brute_force_schur(s, m);
                EXPECT_EQ(ssyt_sum(s, x), want) << s.str() << " m=" << m;
                EXPECT_EQ(jacobi_trudi(s, x), want) << s.str() << " m=" << m;
            }
        }
}

TEST(LoopSchur, InvariantUnderRMatrix) {
    TrialRng rng(67, 1);
    for (int t = 0; t < 5; ++t) {
        auto x = rng.positive_matrix(3, 3);
        for (const auto& s : skew_corpus(2, 3, 3))
            for (int i = 1; i <= 2; ++i) EXPECT_EQ(ssyt_sum(s, row_R(x, i)), ssyt_sum(s, x)) << s.str();
    }
}

TEST(LoopSchur, MayaMinorWithRawColor) {
    ColoredSkewShape s(Partition{4, 4, 4, 1}, Partition{2, 2}, 6, 4);
    auto ms = maya_sets(s, 5);
    IndexSet I = ms.I, J = ms.J;
    for (int& v : I) v += 4;
    for (int& v : J) v += 4;
    EXPECT_EQ(I, (IndexSet{3, 4, 7, 8}));
    EXPECT_EQ(J, (IndexSet{1, 2, 3, 5}));
    TrialRng rng(71, 2);
    auto x = rng.positive_matrix(5, 4);
    EXPECT_EQ(periodic_minor(build_Mtilde(x), ms.I, ms.J), ssyt_sum(s, x));
    EXPECT_EQ(periodic_minor(build_Mtilde(x), I, J), ssyt_sum(s, x));
}

TEST(Invariants, ShapeAndQByTableauxAndMinors) {
    TrialRng rng(73, 3);
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto x = rng.positive_matrix(m, n);
            for (int k = 1; k <= std::min(m, n); ++k) EXPECT_EQ(shape_invariant(x, k), shape_invariant_minor(x, k));
            for (int i = 1; i < m; ++i)
                for (int j = 1; i + j <= m && j <= n; ++j) EXPECT_EQ(q_invariant(x, i, j), q_invariant_minor(x, i, j));
        }
}

TEST(Invariants, QShapeExampleAndErrors) {
    auto q = q_shape(1, 3, 5, 4);
    EXPECT_EQ(q.K, 2);
    EXPECT_EQ(q.shape.lambda, (Partition{4, 4, 4, 1}));
    EXPECT_EQ(q.shape.mu, (Partition{2, 2}));
    EXPECT_EQ(q.shape.r, 2);
    try {
        q_shape(2, 3, 4, 4);
        ADD_FAILURE() << "i + j > m accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "not-Q-type");
    }
}

TEST(Invariants, CornerColorsMatchMayaPredicates) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : skew_corpus(3, 4, n)) {
            if (has_empty_columns(s)) continue;
            auto ms = maya_sets(s, 4);
            EXPECT_EQ(corner_color_ok(s, 4), n_final(ms.I, n) && n_initial(ms.J, n)) << s.str();
        }
}

}  // namespace
}  // namespace lsym
