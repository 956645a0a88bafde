/**
 * @file test_cylindric.cpp
 * @brief Cylindric shapes, border strip removal, cylindric Maya data and the
 *        folded Jacobi-Trudi identities, with the ordinary loop Schur
 *        function of a non-wrapping component as an independent oracle.
 */
#include <gtest/gtest.h>

#include "lsym/crystal.hpp"
#include "lsym/cylindric.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

std::vector<CylShape> small_cylindric_shapes(int k, int n, int max_cells) {
    std::vector<CylShape> out;
    for (const auto& lam : partitions_in_box(n, k)) {
        if (!is_k_cylindric(lam, k, n)) continue;
        for (const auto& mu : partitions_in_box(n, k)) {
            if (!is_k_cylindric(mu, k, n) || !lam.contains(mu) || lam.size() - mu.size() > max_cells) continue;
            for (int r = 1; r <= n; ++r) out.emplace_back(lam, mu, k, r, n);
        }
    }
    return out;
}

TEST(CylShape, KCylindricCondition) {
    EXPECT_TRUE(is_k_cylindric(Partition{5, 5, 5, 5, 2, 1}, 5, 7));
    EXPECT_FALSE(is_k_cylindric(Partition{6}, 5, 7));
    EXPECT_FALSE(is_k_cylindric(Partition{2, 1, 1, 1}, 2, 4));  // columns 4 and 1 differ by 3 > n - k
    EXPECT_TRUE(is_k_cylindric(Partition{2, 1, 1}, 2, 4));
}

TEST(CylShape, BorderStripRemovalExample) {
    CylShape s(Partition{5, 5, 5, 5, 2, 1}, Partition{2}, 5, 5, 7);
    auto r1 = border_strip_remove(s);
    ASSERT_TRUE(r1);
    EXPECT_EQ(r1->lambda, (Partition{5, 5, 5, 1}));
    EXPECT_EQ(r1->mu, (Partition{2}));
    auto r2 = border_strip_remove(*r1);
    ASSERT_TRUE(r2);
    EXPECT_EQ(r2->lambda, (Partition{5, 4}));
    EXPECT_FALSE(border_strip_remove(*r2));
    EXPECT_EQ(d_max(s), 2);
    EXPECT_EQ(shortest_diagonal(s), 2);
}

TEST(CylShape, MayaDataExample) {
    auto cm = cyl_maya(Partition{3, 3, 3, 3, 2, 1}, Partition{2}, 4, 3, 7, 5);
    EXPECT_EQ(cm.I, (IndexSet{2, 4, 5}));
    EXPECT_EQ(cm.J, (IndexSet{-1, 1, 3}));
    EXPECT_EQ(cm.J_hat, (IndexSet{1, 3, 4}));
    EXPECT_EQ(d_star(cm.I, 5), 0);
    EXPECT_EQ(d_star(cm.J, 5), 1);
    EXPECT_EQ(mu_of_I({1, 2, 3, 5, 6}), (Partition{2}));
    EXPECT_EQ(lambda_of_J({1, 2, 3, 5, 7}, 4), (Partition{5, 5, 5, 5, 2, 1}));
}

TEST(CylSchur, FoldedMinorOfBorderStripFamily) {
    TrialRng rng(107, 1);
    auto x = rng.positive_matrix(4, 7);
    CylShape s(Partition{5, 5, 5, 5, 2, 1}, Partition{2}, 5, 5, 7);
    auto d = minor(folded_M(x), {1, 2, 3, 5, 6}, {1, 2, 3, 5, 7});
    EXPECT_EQ(d.degree(), 2);
    EXPECT_EQ(d.coeff(0), 0);
    EXPECT_EQ(d.coeff(1), cyl_schur(*border_strip_remove(s), x));
    EXPECT_EQ(d.coeff(2), cyl_schur(*border_strip_iterate(s, 2), x));
}

TEST(CylSchur, ComponentOracleWhenAColumnIsEmpty) {
    TrialRng rng(109, 2);
    int used = 0;
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto x = rng.positive_matrix(3, n);
            for (const auto& s : small_cylindric_shapes(k, n, 6)) {
                auto comp = cyl_component(s);
                if (!comp) continue;
                EXPECT_EQ(cyl_schur(s, x), ssyt_sum(*comp, x)) << s.str();
                ++used;
            }
        }
    EXPECT_GT(used, 50);
}

TEST(CylSchur, JacobiTrudiPartOne) {
    TrialRng rng(113, 3);
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) {
            auto x = rng.positive_matrix(m, n);
            auto Mhat = folded_M(x);
            for (int k = 1; k <= n; ++k)
                for (const auto& s : small_cylindric_shapes(k, n, 8)) {
                    if (cyl_maya(s.lambda, s.mu, s.r, s.k, m, n).d_star < 0) continue;
                    EXPECT_EQ(cyl_jt_part1(s, Mhat, m), cyl_schur(s, x)) << s.str() << " m=" << m;
                }
        }
}

TEST(CylSchur, PseudoEnergiesInvariantUnderBarredOperators) {
    // Shapes whose reduced Maya sets are [n-k+1, n] and [k] satisfy the cylindric corner color condition.
    TrialRng rng(127, 4);
    const int m = 3;
    int used = 0;
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto x = rng.positive_matrix(m, n);
            Rational c = rng.positive_rational();
            for (const auto& s : small_cylindric_shapes(k, n, 8)) {
                auto cm = cyl_maya(s.lambda, s.mu, s.r, s.k, m, n);
                if (cm.I_hat != interval(n - k + 1, n) || cm.J_hat != interval(1, k)) continue;
                ++used;
                for (int j = 1; j < n; ++j) EXPECT_EQ(cyl_schur(s, apply_e_bar(x, j, c)), cyl_schur(s, x)) << s.str();
            }
        }
    EXPECT_GT(used, 5);
}

TEST(FoldedSumOfMinors, BottomLeftMinors) {
    TrialRng rng(131, 5);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto x = rng.positive_matrix(m, n);
            auto Mhat = folded_M(x);
            for (int i = 1; i <= std::min(m + 1, n); ++i)
                EXPECT_EQ(minor(Mhat, interval(i, n), interval(1, n - i + 1)), bottom_left_folded_rhs(i, x)) << m << "x" << n;
        }
}

TEST(FoldedSumOfMinors, IntervalForm) {
    TrialRng rng(137, 6);
    auto x = rng.positive_matrix(4, 3);
    auto Mb = build_Mbar(x);
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int i = 1; i <= 3; ++i)
                for (int d = 0; b - a - 2 * i + 3 - d >= 0; ++d)
                    EXPECT_EQ(folded_sum_of_minors(Mb, i, a, b, d), folded_cs_ab(x, i, a, b, d)) << a << b << i << d;
}

}  // namespace
}  // namespace lsym
