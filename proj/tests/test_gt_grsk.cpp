/**
 * @file test_gt_grsk.cpp
 * @brief Gelfand-Tsetlin patterns, Phi/Psi and geometric RSK, with classical
 *        RSK as the min-plus oracle and the worked 3 x 2 insertion formulas.
 */
#include <gtest/gtest.h>

#include "lsym/comb.hpp"
#include "lsym/gt.hpp"
#include "lsym/loop_schur.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

GTPattern<Rational> random_pattern(TrialRng& rng, int m, int n) {
    GTPattern<Rational> z(m, n);
    for (auto& [k, v] : z.z) v = rng.positive_rational();
    return z;
}

TEST(GTPattern, TrapezoidDomain) {
    GTPattern<Rational> z(2, 4);
    EXPECT_EQ(z.p(), 2);
    EXPECT_TRUE(z.contains(2, 4));
    EXPECT_FALSE(z.contains(3, 4));
    EXPECT_FALSE(z.contains(2, 1));
    try {
        z(3, 3);
        ADD_FAILURE() << "index outside the trapezoid accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "bad-input");
    }
}

TEST(GTPattern, PhiOfNarrowPattern) {
    TrialRng rng(41, 1);
    auto z = random_pattern(rng, 2, 4);
    auto Z = [&](int i, int j) { return z(i, j); };
    Matrix<Rational> want(4, 4);
    want(1, 1) = Z(1, 1);
    want(2, 1) = Z(2, 2);
    want(2, 2) = Z(1, 2) * Z(2, 2) / Z(1, 1);
    want(3, 1) = 1;
    want(3, 2) = Z(1, 2) / Z(1, 1) + Z(2, 3) / Z(2, 2);
    want(3, 3) = Z(1, 3) * Z(2, 3) / (Z(1, 2) * Z(2, 2));
    want(4, 2) = 1;
    want(4, 3) = Z(1, 3) / Z(1, 2) + Z(2, 4) / Z(2, 3);
    want(4, 4) = Z(1, 4) * Z(2, 4) / (Z(1, 3) * Z(2, 3));
    EXPECT_EQ(phi(z), want);
}

TEST(GTPattern, PsiInvertsPhi) {
    TrialRng rng(43, 2);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto z = random_pattern(rng, m, n);
            EXPECT_EQ(psi(phi(z), m), z) << m << "x" << n;
        }
}

TEST(GTPattern, TableauBijectionExample) {
    Tableau T = {{1, 1, 1, 2, 2, 2, 4, 4}, {2, 3, 3, 3, 4}, {3, 4, 4}};
    auto g = gt_of_tableau(T, 4, 4);
    EXPECT_EQ(g(1, 1), 3);
    EXPECT_EQ(g(1, 2), 6);
    EXPECT_EQ(g(2, 2), 1);
    EXPECT_EQ(g(1, 3), 6);
    EXPECT_EQ(g(2, 3), 4);
    EXPECT_EQ(g(3, 3), 1);
    EXPECT_EQ(g(1, 4), 8);
    EXPECT_EQ(g(2, 4), 5);
    EXPECT_EQ(g(3, 4), 3);
    EXPECT_EQ(g(4, 4), 0);
    EXPECT_EQ(tableau_of_gt(g), T);
}

TEST(GRSK, InsertionFormulasThreeByTwo) {
    TrialRng rng(47, 3);
    for (int t = 0; t < 10; ++t) {
        auto x = rng.positive_matrix(3, 2);
        auto X = [&](int i, int j) { return x(i, j); };
        Rational a = X(1, 2) + X(2, 1);
        Rational b = X(1, 2) * X(2, 2) + X(1, 2) * X(3, 1) + X(2, 1) * X(3, 1);
        auto g = glue(grsk(x));
        EXPECT_EQ(g(1, 1), a);
        EXPECT_EQ(g(1, 2), X(1, 1) * X(1, 2));
        EXPECT_EQ(g(2, 1), b);
        EXPECT_EQ(g(2, 2), X(1, 1) * X(2, 1) * X(1, 2) * X(2, 2) / a);
        EXPECT_EQ(g(3, 1), X(1, 1) * X(2, 1) * X(3, 1));
        EXPECT_EQ(g(3, 2), X(1, 1) * X(2, 1) * X(3, 1) * X(1, 2) * X(2, 2) * X(3, 2) / b);
    }
}

TEST(GRSK, AllOnesThreeByTwo) {
    auto g = glue(grsk(Matrix<Rational>(3, 2, Rational(1))));
    EXPECT_EQ(g(1, 1), 2);
    EXPECT_EQ(g(2, 1), 3);
    EXPECT_EQ(g(3, 1), 1);
    EXPECT_EQ(g(1, 2), 1);
    EXPECT_EQ(g(2, 2), Rational(1, 2));
    EXPECT_EQ(g(3, 2), Rational(1, 3));
}

TEST(GRSK, MinPlusIsClassicalRSK) {
    TrialRng rng(53, 4);
    for (int t = 0; t < 200; ++t) {
        const int m = static_cast<int>(rng.uniform(1, 4)), n = static_cast<int>(rng.uniform(1, 4));
        auto a = rng.int_matrix(m, n, 4);
        auto [P, Q] = trop_grsk(a);
        auto pq = rsk(a);
        EXPECT_EQ(P, gt_of_tableau(pq.P, n, m));
        EXPECT_EQ(Q, gt_of_tableau(pq.Q, m, n));
    }
}

TEST(GRSK, RSKWorkedExample) {
    IntMatrix a(3, 2);
    a(1, 1) = 1, a(1, 2) = 4, a(2, 1) = 2, a(2, 2) = 1, a(3, 1) = 1, a(3, 2) = 0;
    auto [P, Q] = trop_grsk(a);
    auto g = glue(PQPair<long>{P, Q});
    EXPECT_EQ(g(1, 1), 2);
    EXPECT_EQ(g(1, 2), 5);
    EXPECT_EQ(g(2, 1), 3);
    EXPECT_EQ(g(2, 2), 6);
    EXPECT_EQ(g(3, 1), 4);
    EXPECT_EQ(g(3, 2), 6);
}

TEST(GRSK, ThreeRoutesAgree) {
    TrialRng rng(59, 5);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto x = rng.positive_matrix(m, n);
            auto a = grsk(x), b = grsk_transposed(x), c = grsk_psi(x);
            EXPECT_EQ(a.P, b.P);
            EXPECT_EQ(a.Q, b.Q);
            EXPECT_EQ(a.P, c.P);
            EXPECT_EQ(a.Q, c.Q);
            auto t = grsk(x.transpose());
            EXPECT_EQ(t.P, a.Q);
            EXPECT_EQ(t.Q, a.P);
        }
}

TEST(Decoration, TableauSumEqualsMinorRatios) {
    TrialRng rng(61, 6);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto z = random_pattern(rng, m, n);
            EXPECT_EQ(decoration_gt(z), decoration_gt_minors(z));
        }
}

}  // namespace
}  // namespace lsym
