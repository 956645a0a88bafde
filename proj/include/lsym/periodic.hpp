/**
 * @file periodic.hpp
 * @brief n-periodic Z x Z matrices stored as block diagonals, and their folding.
 *
 * An n-periodic matrix A satisfies A_{i+n,j+n} = A_{ij}. It is stored as the
 * blocks M_0, ..., M_D with (M_d)_{ab} = A_{a+dn, b} for a, b in [1, n].
 * Blocks with d < 0 are zero. Blocks with d > D are zero when the matrix is
 * declared closed (as for whirl products, whose band is known); otherwise an
 * access beyond the stored band reports "increase-D".
 *
 * Folding sends A to the n x n matrix of polynomials in t whose (a, b) entry
 * is sum_d t^d (M_d)_{ab}.
 */
#pragma once

#include <vector>

#include "lsym/matrix.hpp"
#include "lsym/tpoly.hpp"

namespace lsym {

inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/** Representative of k modulo n in [1, n]. */
inline int mod1(long k, int n) { return static_cast<int>(k - n * floor_div(k - 1, n)); }

template <class T>
struct PeriodicMatrix {
    int n = 0;
    std::vector<Matrix<T>> blocks;
    bool closed = false;

    int depth() const { return static_cast<int>(blocks.size()) - 1; }

    T at(long i, long j) const {
        long shift = floor_div(j - 1, n);
        long ii = i - shift * n;
        int b = static_cast<int>(j - shift * n);
        long d = floor_div(ii - 1, n);
        if (d < 0) return Arith<T>::zero();
        if (d > depth()) {
            if (closed) return Arith<T>::zero();
            fail("increase-D", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") needs block " + std::to_string(d) + " beyond D=" + std::to_string(depth()));
        }
        int a = static_cast<int>(ii - d * n);
        return blocks[d](a, b);
    }

    /** The finite submatrix with rows I and columns J, both sorted increasingly. */
    Matrix<T> window(IndexSet I, IndexSet J) const {
        std::sort(I.begin(), I.end());
        std::sort(J.begin(), J.end());
        Matrix<T> w(static_cast<int>(I.size()), static_cast<int>(J.size()));
        for (std::size_t a = 0; a < I.size(); ++a)
            for (std::size_t b = 0; b < J.size(); ++b) w(a + 1, b + 1) = at(I[a], J[b]);
        return w;
    }
};

/** Validates the blocks and wraps them; the result is not closed. */
template <class T>
PeriodicMatrix<T> build_periodic(int n, std::vector<Matrix<T>> blocks) {
    if (n < 1) fail("bad-input", "period must be positive");
    if (blocks.empty()) fail("bad-input", "at least one block is required");
    for (const auto& b : blocks)
        if (b.rows() != n || b.cols() != n) fail("minor-shape", "every block must be n x n");
    PeriodicMatrix<T> p;
    p.n = n;
    p.blocks = std::move(blocks);
    return p;
}

/** Delta_{I,J} of the periodic matrix for arbitrary integer index sets. */
template <class T>
T periodic_minor(const PeriodicMatrix<T>& P, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) fail("minor-shape", "|I| != |J|");
    return det(P.window(I, J));
}

template <class T>
Matrix<TPoly<T>> fold(const PeriodicMatrix<T>& P) {
    Matrix<TPoly<T>> F(P.n, P.n);
    for (int a = 1; a <= P.n; ++a)
        for (int b = 1; b <= P.n; ++b) {
            std::vector<T> c;
            for (const auto& blk : P.blocks) c.push_back(blk(a, b));
            F(a, b) = TPoly<T>(std::move(c));
        }
    return F;
}

template <class T>
PeriodicMatrix<T> unfold(const Matrix<TPoly<T>>& F, int D, bool closed = false) {
    std::vector<Matrix<T>> blocks;
    for (int d = 0; d <= D; ++d) {
        Matrix<T> blk(F.rows(), F.cols());
        for (int a = 1; a <= F.rows(); ++a)
            for (int b = 1; b <= F.cols(); ++b) blk(a, b) = F(a, b).coeff(d);
        blocks.push_back(std::move(blk));
    }
    auto P = build_periodic(F.rows(), std::move(blocks));
    P.closed = closed;
    return P;
}

/** Coefficient of t^d in Delta_{I,J}(F) for I, J inside [n]. */
template <class T>
T tpoly_minor_coeff(const Matrix<TPoly<T>>& F, const IndexSet& I, const IndexSet& J, int d) {
    if constexpr (!Arith<T>::has_subtraction) {
        fail("needs-subtraction", "folded determinants are not defined in min-plus mode");
    } else {
        return minor(F, I, J).coeff(d);
    }
}

}  // namespace lsym
