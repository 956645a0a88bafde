/**
 * @file test_geom_crystal.cpp
 * @brief Geometric crystal operators and R-matrices, checked against the
 *        combinatorial crystal of single-row tableaux (signature rule and
 *        Knuth equivalence) through min-plus evaluation.
 */
#include <gtest/gtest.h>

#include <optional>

#include "lsym/comb.hpp"
#include "lsym/crystal.hpp"
#include "lsym/loop_schur.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

/**
 * Raising operator e_i on the tensor product of single rows (columns of a),
 * by the signature rule with the factors read from the last column to the
 * first. Returns nullopt when e_i kills the element.
 */
std::optional<IntMatrix> signature_e(IntMatrix a, int i) {
    std::vector<std::pair<char, int>> word;
    for (int k = a.cols(); k >= 1; --k) {
        for (long q = 0; q < a(i + 1, k); ++q) word.push_back({'-', k});
        for (long q = 0; q < a(i, k); ++q) word.push_back({'+', k});
    }
    std::vector<std::pair<char, int>> reduced;
    for (const auto& s : word) {
        if (s.first == '-' && !reduced.empty() && reduced.back().first == '+')
            reduced.pop_back();
        else
            reduced.push_back(s);
    }
    int target = -1;
    for (const auto& s : reduced)
        if (s.first == '-') target = s.second;
    if (target < 0) return std::nullopt;
    a(i, target) += 1;
    a(i + 1, target) -= 1;
    return a;
}

/** Insertion tableau of the concatenated row words of rows i and i+1. */
Tableau insert_rows(const IntMatrix& a, int i) {
    Tableau T;
    for (int r : {i, i + 1})
        for (int j = 1; j <= a.cols(); ++j)
            for (long q = 0; q < a(r, j); ++q) row_insert(T, j);
    return T;
}

IntMatrix to_int(const Matrix<Trop>& x) {
    IntMatrix a(x.rows(), x.cols());
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j) a(i, j) = x(i, j).v;
    return a;
}

TEST(BasicCrystal, SingleColumnAction) {
    Vec<Rational> x = {Rational(2), Rational(3), Rational(5)};
    auto y = basic_e(x, 2, Rational(7));
    EXPECT_EQ(y, (Vec<Rational>{2, 21, Rational(5, 7)}));
    auto r = basic_maps(x, 1);
    EXPECT_EQ(r.eps, 3);
    EXPECT_EQ(r.phi, 2);
}

TEST(ProductCrystal, TwoFactorRuleByHand) {
    // X_2 x X_2 with x = (a1, a2), y = (b1, b2): eps = a2 b2 / (a2 + b1), phi = a1 b1 / (a2 + b1), here 21/8 and 10/8 = 5/4.
    Matrix<Rational> x(2, 2);
    x(1, 1) = 2, x(2, 1) = 3, x(1, 2) = 5, x(2, 2) = 7;
    auto r = product_maps_recursive(x, 1);
    EXPECT_EQ(r.eps, Rational(21, 8));
    EXPECT_EQ(r.phi, Rational(5, 4));
    auto m = product_maps(x, 1);
    EXPECT_EQ(m.eps, r.eps);
    EXPECT_EQ(m.phi, r.phi);
}

TEST(ProductCrystal, TropicalRaisingIsSignatureRule) {
    TrialRng rng(23, 1);
    int acted = 0;
    for (int t = 0; t < 400; ++t) {
        const int m = static_cast<int>(rng.uniform(2, 4)), n = static_cast<int>(rng.uniform(1, 4));
        auto a = rng.int_matrix(m, n, 3);
        const int i = static_cast<int>(rng.uniform(1, m - 1));
        auto comb = signature_e(a, i);
        auto eps = product_maps_recursive(trop_matrix(a), i).eps;
        if (!comb) {
            EXPECT_EQ(eps.v, 0) << "e_i kills the element iff eps_i = 0";
            continue;
        }
        EXPECT_GT(eps.v, 0);
        ++acted;
        EXPECT_EQ(to_int(apply_e(trop_matrix(a), i, Trop(1))), *comb);
    }
    EXPECT_GT(acted, 200);
}

TEST(ProductCrystal, OperatorsCompose) {
    TrialRng rng(29, 2);
    auto x = rng.positive_matrix(3, 4);
    Rational c = rng.positive_rational(), d = rng.positive_rational();
    EXPECT_EQ(apply_e(apply_e(x, 1, c), 1, d), apply_e(x, 1, Rational(c * d)));
    EXPECT_EQ(apply_e_bar(apply_e(x, 2, c), 3, d), apply_e(apply_e_bar(x, 3, d), 2, c));
}

TEST(ProductCrystal, RejectsOutOfRangeIndex) {
    Matrix<Rational> x(2, 2, Rational(1));
    try {
        apply_e(x, 2, Rational(2));
        ADD_FAILURE() << "e_2 on X_2 accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "bad-input");
    }
}

TEST(RMatrix, SingleColumnSwaps) {
    Matrix<Rational> x(2, 1);
    x(1, 1) = Rational(3, 4);
    x(2, 1) = 5;
    auto y = row_R(x, 1);
    EXPECT_EQ(y(1, 1), 5);
    EXPECT_EQ(y(2, 1), Rational(3, 4));
}

TEST(RMatrix, TropicalIsCombinatorialR) {
    // The combinatorial R-matrix swaps the row lengths and preserves the insertion tableau.
    TrialRng rng(31, 3);
    for (int t = 0; t < 300; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        auto a = rng.int_matrix(2, n, 3);
        auto b = to_int(row_R(trop_matrix(a), 1));
        long la = 0, lb = 0, ra = 0, rb = 0;
        for (int j = 1; j <= n; ++j) la += a(1, j), lb += a(2, j), ra += b(1, j), rb += b(2, j);
        EXPECT_EQ(ra, lb);
        EXPECT_EQ(rb, la);
        EXPECT_EQ(insert_rows(b, 1), insert_rows(a, 1));
    }
}

TEST(RMatrix, WeylReflectionAndInvolution) {
    TrialRng rng(37, 4);
    for (int t = 0; t < 25; ++t) {
        auto x = rng.positive_matrix(3, 3);
        for (int i = 1; i <= 2; ++i) {
            EXPECT_EQ(row_R(x, i), reflect(x, i));
            EXPECT_EQ(row_R(row_R(x, i), i), x);
        }
        EXPECT_EQ(col_R(col_R(x, 1), 1), x);
        auto y = row_R(x, 1);
        for (int k = 0; k <= 3; ++k)
            for (int r = 1; r <= 3; ++r) EXPECT_EQ(loop_E(y, k, r), loop_E(x, k, r));
    }
}

}  // namespace
}  // namespace lsym
