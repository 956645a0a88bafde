/**
 * @file test_comb_oracle.cpp
 * @brief The classical ground truth: RSK and Burge insertion, the GT
 *        bijection, and charge checked against known Kostka-Foulkes
 *        polynomials.
 */
#include <gtest/gtest.h>

#include <map>

#include "lsym/comb.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

/** Every semistandard tableau of the given shape and content. */
std::vector<Tableau> tableaux(const std::vector<int>& shape, const std::vector<int>& content) {
    std::vector<Tableau> out;
    Tableau T;
    for (int len : shape) T.push_back(std::vector<int>(len, 0));
    std::vector<int> left = content;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
        if (i == T.size()) {
            out.push_back(T);
            return;
        }
        if (j == T[i].size()) {
            go(i + 1, 0);
            return;
        }
        for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
            if (left[v - 1] == 0) continue;
            if (j > 0 && T[i][j - 1] > v) continue;
            if (i > 0 && T[i - 1][j] >= v) continue;
            T[i][j] = v;
            --left[v - 1];
            go(i, j + 1);
            ++left[v - 1];
        }
        T[i][j] = 0;
    };
    go(0, 0);
    return out;
}

/** Coefficients of sum over tableaux of t^charge, indexed by degree. */
std::map<long, int> charge_polynomial(const std::vector<int>& shape, const std::vector<int>& content) {
    std::map<long, int> out;
    for (const auto& T : tableaux(shape, content)) ++out[charge(T)];
    return out;
}

TEST(Charge, KostkaFoulkesPolynomials) {
    using P = std::map<long, int>;
    EXPECT_EQ(charge_polynomial({3}, {1, 1, 1}), (P{{3, 1}}));
    EXPECT_EQ(charge_polynomial({2, 1}, {1, 1, 1}), (P{{1, 1}, {2, 1}}));
    EXPECT_EQ(charge_polynomial({1, 1, 1}, {1, 1, 1}), (P{{0, 1}}));
    EXPECT_EQ(charge_polynomial({2, 2}, {2, 1, 1}), (P{{1, 1}}));
    EXPECT_EQ(charge_polynomial({3, 1}, {2, 1, 1}), (P{{1, 1}, {2, 1}}));
    EXPECT_EQ(charge_polynomial({4}, {2, 1, 1}), (P{{3, 1}}));
    EXPECT_EQ(charge_polynomial({2, 2}, {1, 1, 1, 1}), (P{{2, 1}, {4, 1}}));
    EXPECT_EQ(charge_polynomial({3, 1}, {1, 1, 1, 1}), (P{{3, 1}, {4, 1}, {5, 1}}));
}

TEST(Charge, CochargeComplementsCharge) {
    Tableau T = {{1, 1, 2}, {2, 3}};
    // content (2, 2, 1): n(content) = 0 * 2 + 1 * 2 + 2 * 1 = 4.
    EXPECT_EQ(cocharge(T), 4 - charge(T));
    try {
        cocharge(Tableau{{1, 2, 2}});
        ADD_FAILURE() << "non-partition content accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "non-partition-content");
    }
}

TEST(RSK, WorkedExample) {
    IntMatrix a(3, 2);
    a(1, 1) = 1, a(1, 2) = 4, a(2, 1) = 2, a(2, 2) = 1, a(3, 1) = 1, a(3, 2) = 0;
    auto pq = rsk(a);
    EXPECT_EQ(tableau_str(pq.P), "111122/222");
    EXPECT_EQ(tableau_str(pq.Q), "111112/223");
}

TEST(RSK, SymmetryShapeAndContent) {
    TrialRng rng(139, 1);
    for (int t = 0; t < 200; ++t) {
        const int m = static_cast<int>(rng.uniform(1, 4)), n = static_cast<int>(rng.uniform(1, 4));
        auto a = rng.int_matrix(m, n, 3);
        auto pq = rsk(a);
        EXPECT_TRUE(is_semistandard(pq.P));
        EXPECT_TRUE(is_semistandard(pq.Q));
        EXPECT_EQ(tableau_shape(pq.P), tableau_shape(pq.Q));
        auto tr = rsk(a.transpose());
        EXPECT_EQ(tr.P, pq.Q);
        EXPECT_EQ(tr.Q, pq.P);
        auto cp = tableau_content(pq.P);
        for (int j = 1; j <= static_cast<int>(cp.size()); ++j) {
            long col = 0;
            for (int i = 1; i <= m; ++i) col += a(i, j);
            EXPECT_EQ(cp[j - 1], col);
        }
        EXPECT_EQ(burge(a).P, pq.P);
    }
}

TEST(GTBijection, RoundTrip) {
    TrialRng rng(149, 2);
    for (int t = 0; t < 100; ++t) {
        auto a = rng.int_matrix(3, 4, 3);
        auto P = rsk(a).P;
        auto g = gt_of_tableau(P, 4, 3);
        EXPECT_EQ(tableau_of_gt(g), P);
    }
}

TEST(GTBijection, RejectsNonInterlacingPattern) {
    GTPattern<long> g(2, 2);
    g(1, 1) = 3;
    g(1, 2) = 2;
    g(2, 2) = 1;
    try {
        tableau_of_gt(g);
        ADD_FAILURE() << "non-interlacing pattern accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "bad-input");
    }
}

TEST(Insertion, RowAndColumnBumping) {
    Tableau T;
    for (int v : {2, 3, 1, 2}) row_insert(T, v);
    EXPECT_EQ(tableau_str(T), "12/23");
    Tableau C;
    for (int v : {2, 3, 1}) column_insert(C, v);
    // 2 and 3 stack in the first column, then 1 bumps 2 into the second column.
    EXPECT_EQ(tableau_str(C), "12/3");
}

}  // namespace
}  // namespace lsym
