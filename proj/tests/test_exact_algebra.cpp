/**
 * @file test_exact_algebra.cpp
 * @brief Rationals, the min-plus semifield, sparse polynomials, determinants,
 *        periodic matrices and the seeded point generator.
 */
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lsym/loop_schur.hpp"
#include "lsym/rng.hpp"

namespace lsym {
namespace {

/** Leibniz expansion over all permutations: the textbook definition of det. */
template <class T>
T leibniz(const Matrix<T>& A) {
    const int k = A.rows();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    T total = Arith<T>::zero();
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
        T term = Arith<T>::one();
        for (int a = 0; a < k; ++a) term = term * A(a + 1, perm[a]);
        total = inversions % 2 ? T(total - term) : T(total + term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix<Rational> sparse_random(TrialRng& rng, int r, int c) {
    Matrix<Rational> A(r, c);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j)
            if (rng.uniform(0, 3) != 0) {
                A(i, j) = Rational(rng.uniform(-9, 9), rng.uniform(1, 5));
                A(i, j).canonicalize();
            }
    return A;
}

TEST(Rational, ParseAndPrintRoundTrip) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-8")), "-8");
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_EQ(parse_rational("1/3") + parse_rational("1/6"), Rational(1, 2));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "a/b", "1//2", "3.5"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), "bad-input");
        }
    }
}

TEST(Trop, SemifieldLaws) {
    TrialRng rng(7, 1);
    for (int t = 0; t < 200; ++t) {
        Trop a(rng.uniform(-20, 20)), b(rng.uniform(-20, 20)), c(rng.uniform(-20, 20));
        EXPECT_EQ(a + b, Trop(std::min(a.v, b.v)));
        EXPECT_EQ(a * b, Trop(a.v + b.v));
        EXPECT_EQ((a * b) / b, a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + Trop::infinity(), a);
        EXPECT_EQ(a * Arith<Trop>::one(), a);
    }
    EXPECT_EQ(Trop::infinity() * Trop(3), Trop::infinity());
}

TEST(Poly, ExpansionAndNormalForm) {
    Poly x = Poly::loop(1, 1), y = Poly::loop(2, 1);
    Poly sq = (x + y) * (x + y);
    EXPECT_EQ(sq, x * x + Poly(2) * x * y + y * y);
    EXPECT_EQ(sq.size(), 3u);
    EXPECT_TRUE((sq - sq).is_zero());
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
}

TEST(Determinant, MatchesLeibnizExpansion) {
    TrialRng rng(11, 2);
    for (int k = 1; k <= 6; ++k)
        for (int t = 0; t < 20; ++t) {
            auto A = sparse_random(rng, k, k);
            EXPECT_EQ(det(A), leibniz(A)) << "size " << k;
            EXPECT_EQ(det_bareiss(A), leibniz(A)) << "size " << k;
        }
}

TEST(Determinant, PolynomialMatchesLeibniz) {
    auto X = symbolic_point(3, 3);
    EXPECT_EQ(det(X), leibniz(X));
    EXPECT_EQ(det(X).size(), 6u);
}

TEST(Determinant, CauchyBinet) {
    TrialRng rng(13, 3);
    for (int t = 0; t < 20; ++t) {
        auto A = sparse_random(rng, 4, 5);
        auto B = sparse_random(rng, 5, 4);
        auto C = A * B;
        for (const auto& I : combinations(interval(1, 4), 2))
            for (const auto& J : combinations(interval(1, 4), 2)) {
                Rational sum = 0;
                for (const auto& K : combinations(interval(1, 5), 2)) sum += minor(A, I, K) * minor(B, K, J);
                EXPECT_EQ(minor(C, I, J), sum);
            }
    }
}

TEST(Determinant, ErrorCodes) {
    Matrix<Rational> A(3, 3, Rational(1));
    try {
        minor(A, {1, 2}, {1});
        ADD_FAILURE() << "unequal index sets accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "minor-shape");
    }
    try {
        minor(A, {1, 4}, {1, 2});
        ADD_FAILURE() << "out-of-range index accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "minor-shape");
    }
    Matrix<Trop> T(2, 2, Trop(0));
    try {
        det(T);
        ADD_FAILURE() << "min-plus determinant computed";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "needs-subtraction");
    }
}

TEST(TPoly, ConvolutionProduct) {
    TPoly<Rational> p(std::vector<Rational>{1, 2}), q(std::vector<Rational>{3, 0, Rational(1, 2)});
    auto r = p * q;
    EXPECT_EQ(r.degree(), 3);
    EXPECT_EQ(r.coeff(0), 3);
    EXPECT_EQ(r.coeff(1), 6);
    EXPECT_EQ(r.coeff(2), Rational(1, 2));
    EXPECT_EQ(r.coeff(3), 1);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(PeriodicMatrix, ShiftInvarianceAndBand) {
    TrialRng rng(17, 4);
    auto x = rng.positive_matrix(3, 2);
    auto Mt = build_Mtilde(x);
    for (long i = -4; i <= 6; ++i)
        for (long j = -4; j <= 6; ++j) EXPECT_EQ(Mt.at(i, j), Mt.at(i + 2, j + 2));
    EXPECT_EQ(Mt.at(1, 5), Rational(0));  // strictly above the diagonal band
    EXPECT_EQ(Mt.at(40, 1), Rational(0));  // a whirl product has a known band, so it is closed
    auto open = unfold(fold(Mt), Mt.depth());
    EXPECT_EQ(open.at(3, 1), Mt.at(3, 1));
    try {
        open.at(40, 1);
        ADD_FAILURE() << "entry outside the stored band returned";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "increase-D");
    }
}

TEST(PeriodicMatrix, FoldUnfoldRoundTrip) {
    TrialRng rng(19, 5);
    auto x = rng.positive_matrix(3, 3);
    auto Mt = build_Mtilde(x);
    auto back = unfold(fold(Mt), Mt.depth(), true);
    for (long i = -2; i <= 8; ++i)
        for (long j = -2; j <= 8; ++j) EXPECT_EQ(back.at(i, j), Mt.at(i, j));
}

TEST(TrialRng, DeterministicAndInRange) {
    TrialRng a(42, 9), b(42, 9), c(42, 10);
    bool differs = false;
    for (int t = 0; t < 100; ++t) {
        Rational p = a.positive_rational();
        EXPECT_EQ(p, b.positive_rational());
        differs = differs || p != c.positive_rational();
        EXPECT_GT(p, 0);
        EXPECT_LE(p.get_num(), 20);
        EXPECT_LE(p.get_den(), 20);
    }
    EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace lsym
