/**
 * @file test_energy_cocharge.cpp
 * @brief Central charge, geometric energy and cocharge: agreement of the
 *        independent formulas, symmetry, and the min-plus values against
 *        classical cocharge of RSK and Burge recording tableaux.
 */
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lsym/comb.hpp"
#include "lsym/crystal.hpp"
#include "lsym/energy.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

/** Reorders the rows of a by their sums (stable), increasing or decreasing. */
IntMatrix sort_rows(const IntMatrix& a, bool increasing) {
    std::vector<int> order(a.rows());
    std::iota(order.begin(), order.end(), 1);
    auto sum = [&](int i) {
        long s = 0;
        for (int j = 1; j <= a.cols(); ++j) s += a(i, j);
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return increasing ? sum(p) < sum(q) : sum(p) > sum(q); });
    IntMatrix b(a.rows(), a.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) b(i, j) = a(order[i - 1], j);
    return b;
}

GTPattern<Rational> random_pattern(TrialRng& rng, int m, int n) {
    GTPattern<Rational> z(m, n);
    for (auto& [k, v] : z.z) v = rng.positive_rational();
    return z;
}

TEST(Energy, TrivialCases) {
    TrialRng rng(151, 1);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(energy_D(rng.positive_matrix(1, n)), 1);
        EXPECT_EQ(energy_D(trop_matrix(rng.int_matrix(1, n, 4))), Trop(0));
    }
    EXPECT_EQ(energy_D(rng.positive_matrix(2, 1)), 1);
    auto x = rng.positive_matrix(2, 2);
    EXPECT_EQ(energy_D(x), x(1, 2) + x(2, 1));  // s^(2)_(1) = x_1^(2) + x_2^(2)
}

TEST(Energy, ThreeFormulasAgree) {
    TrialRng rng(157, 2);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto x = rng.positive_matrix(m, n);
            Rational d = energy_D(x);
            EXPECT_EQ(energy_product(x), d) << m << "x" << n;
            EXPECT_EQ(energy_lp_product(x), d) << m << "x" << n;
        }
}

TEST(Energy, InvariantUnderRAndBarredOperators) {
    TrialRng rng(163, 3);
    for (int t = 0; t < 5; ++t) {
        auto x = rng.positive_matrix(3, 3);
        Rational c = rng.positive_rational();
        for (int i = 1; i <= 2; ++i) EXPECT_EQ(energy_D(row_R(x, i)), energy_D(x));
        for (int j = 1; j <= 2; ++j) EXPECT_EQ(energy_D(apply_e_bar(x, j, c)), energy_D(x));
    }
}

TEST(Energy, MinPlusIsCochargeOfBurgeRecordingTableau) {
    TrialRng rng(167, 4);
    for (int t = 0; t < 100; ++t) {
        const int m = static_cast<int>(rng.uniform(1, 4)), n = static_cast<int>(rng.uniform(1, 4));
        auto a = sort_rows(rng.int_matrix(m, n, 4), true);
        EXPECT_EQ(trop_energy(a), cocharge(burge(a).Q));
        EXPECT_EQ(trop_energy_product(a), trop_energy(a));
    }
}

TEST(CentralCharge, ThreeRoutesAgree) {
    TrialRng rng(173, 5);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto x = rng.positive_matrix(m, n);
            Rational def = central_charge_def(x);
            EXPECT_EQ(central_charge_A(x), def) << m << "x" << n;
            EXPECT_EQ(central_charge_B(x), def) << m << "x" << n;
        }
}

TEST(CentralCharge, LaurentFormInQPatternThreeByThree) {
    TrialRng rng(179, 6);
    auto x = rng.positive_matrix(3, 3);
    auto Q = grsk(x).Q;
    auto z = [&](int a, int b) { return Q(a, b); };
    EXPECT_EQ(central_charge_def(x), z(1, 2) / z(1, 1) + z(1, 3) / z(1, 2) + z(2, 3) / z(2, 2) + z(1, 1) / z(2, 2) +
                                         z(1, 2) / z(2, 3) + z(2, 2) / z(3, 3) + z(3, 3));
}

TEST(Cocharge, SigmaFormulasForHeightFour) {
    TrialRng rng(181, 7);
    auto z = random_pattern(rng, 4, 4);
    auto Z = [&](int i, int j) { return z(i, j); };
    EXPECT_EQ(sigma_k(z, 2), Z(2, 2));
    EXPECT_EQ(sigma_k(z, 3), Z(2, 3) * Z(3, 3) * Z(3, 3) / Z(2, 2) * (Z(2, 2) / Z(3, 3) + Z(1, 3) / Z(1, 2)));
}

TEST(Cocharge, KBPatternCountAndSums) {
    long fact = 1;
    for (int k = 2; k <= 7; ++k) {
        fact *= k - 1;
        auto pats = kb_patterns(k);
        EXPECT_EQ(static_cast<long>(pats.size()), fact) << "k=" << k;
        auto brute = kb_patterns_bruteforce(k);
        std::sort(pats.begin(), pats.end());
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(pats, brute) << "k=" << k;
    }
    TrialRng rng(191, 8);
    for (int h = 2; h <= 5; ++h) {
        auto z = random_pattern(rng, h, h);
        for (int k = 2; k <= h; ++k) EXPECT_EQ(sigma_k(z, k), kb_sigma(z, k)) << "h=" << h << " k=" << k;
    }
}

TEST(Cocharge, MinPlusIsClassicalCocharge) {
    TrialRng rng(193, 9);
    for (int t = 0; t < 100; ++t) {
        const int m = static_cast<int>(rng.uniform(1, 4)), n = static_cast<int>(rng.uniform(1, 4));
        auto a = sort_rows(rng.int_matrix(m, n, 4), false);
        auto Q = rsk(a).Q;
        auto g = gt_of_tableau(Q, m, n);
        EXPECT_EQ(trop_cocharge(g), cocharge(Q));
        EXPECT_EQ(trop_cocharge_kb(g), cocharge(Q));
    }
}

}  // namespace
}  // namespace lsym
