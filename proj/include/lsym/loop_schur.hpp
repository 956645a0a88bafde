/**
 * @file loop_schur.hpp
 * @brief Loop elementary, homogeneous and skew Schur functions, the periodic
 *        matrix M~, Maya index sets, the corner color condition, shape and
 *        Q-invariants, and the modified matrix M~'.
 *
 * A point is an m x n matrix x with x(i, j) = x_i^j. The loop variable with
 * color r is x_i^(r) = x_i^{r - i + 1}, upper index read modulo n. All
 * tableau sums are subtraction-free and run over Rational, Trop and Poly;
 * determinant routes need subtraction.
 */
#pragma once

#include <map>
#include <vector>

#include "lsym/crystal.hpp"
#include "lsym/matrix.hpp"
#include "lsym/network.hpp"
#include "lsym/partition.hpp"
#include "lsym/periodic.hpp"
#include "lsym/poly.hpp"

namespace lsym {

template <class T>
T loop_x(const Matrix<T>& x, int i, long r) {
    return x(i, mod1(r - i + 1, x.cols()));
}

/** The m x n matrix of symbolic loop variables x(i, j) = x_i^j. */
inline Matrix<Poly> symbolic_point(int m, int n) {
    Matrix<Poly> x(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) x(i, j) = Poly::loop(i, j);
    return x;
}

/** E_k^(r) = sum over i_1 < ... < i_k of x_{i_1}^(r) x_{i_2}^(r+1) ... */
template <class T>
T loop_E(const Matrix<T>& x, int k, long r) {
    const int m = x.rows();
    if (k < 0 || k > m) return Arith<T>::zero();
    if (k == 0) return Arith<T>::one();
    std::vector<T> f(k + 1, Arith<T>::zero());
    f[0] = Arith<T>::one();
    for (int i = 1; i <= m; ++i)
        for (int j = std::min(i, k); j >= 1; --j) f[j] = f[j] + f[j - 1] * loop_x(x, i, r + j - 1);
    return f[k];
}

/** H_k^(r) = sum over i_1 <= ... <= i_k of x_{i_1}^(r) x_{i_2}^(r-1) ... */
template <class T>
T loop_H(const Matrix<T>& x, int k, long r) {
    const int m = x.rows();
    if (k < 0) return Arith<T>::zero();
    std::vector<T> g(k + 1, Arith<T>::zero());
    g[0] = Arith<T>::one();
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j) g[j] = g[j] + g[j - 1] * loop_x(x, i, r - j + 1);
    return g[k];
}

// ---------------------------------------------------------------------------
// Tableau sums

/** A filling of lambda/mu: entry (i, j) at fill[i-1][j-1]; cells of mu hold 0. */
using Filling = std::vector<std::vector<int>>;

/** x^T = product over cells of x_{T(s)}^(color(s)). */
template <class T>
T tableau_weight(const ColoredSkewShape& s, const Filling& f, const Matrix<T>& x) {
    T w = Arith<T>::one();
    for (auto [i, j] : s.cells()) w = w * loop_x(x, f[i - 1][j - 1], s.color(i, j));
    return w;
}

/** Every semistandard filling with entries in [1, m], by backtracking in row order. */
inline std::vector<Filling> enumerate_ssyt(const ColoredSkewShape& s, int m) {
    std::vector<Filling> out;
    Filling f;
    for (int i = 1; i <= s.lambda.length(); ++i) f.emplace_back(s.lambda[i], 0);
    const auto cells = s.cells();
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.push_back(f);
            return;
        }
        auto [i, j] = cells[k];
        int lo = 1;
        if (s.contains_cell(i, j - 1)) lo = std::max(lo, f[i - 1][j - 2]);
        if (s.contains_cell(i - 1, j)) lo = std::max(lo, f[i - 2][j - 1] + 1);
        for (int v = lo; v <= m; ++v) {
            f[i - 1][j - 1] = v;
            self(self, k + 1);
        }
        f[i - 1][j - 1] = 0;
    };
    rec(rec, 0);
    return out;
}

/** Loop skew Schur function as an explicit sum over enumerated tableaux. */
template <class T>
T ssyt_sum_enumerated(const ColoredSkewShape& s, const Matrix<T>& x) {
    T total = Arith<T>::zero();
    for (const auto& f : enumerate_ssyt(s, x.rows())) total = total + tableau_weight(s, f, x);
    return total;
}

/**
 * Loop skew Schur function s^(r)_{lambda/mu}(x) by a column transfer sum.
 * The state is the filling of the current column; the next column must be
 * strictly increasing and weakly exceed the current one on shared rows.
 */
template <class T>
T ssyt_sum(const ColoredSkewShape& s, const Matrix<T>& x) {
    if (x.cols() != s.n) fail("bad-input", "point width differs from the shape period");
    const int m = x.rows();
    const Partition lc = s.lambda.conjugate();
    const Partition mc = s.mu.conjugate();
    const int width = s.lambda[1];
    std::map<std::vector<int>, T> cur;
    cur.emplace(std::vector<int>{}, Arith<T>::one());
    int prev_top = 1;
    for (int c = 1; c <= width; ++c) {
        const int top = mc[c] + 1;
        const int bot = lc[c];
        const int len = bot - top + 1;
        if (len > m) return Arith<T>::zero();
        std::map<std::vector<int>, T> next;
        if (len <= 0) {
            T total = Arith<T>::zero();
            for (const auto& [st, w] : cur) total = total + w;
            next.emplace(std::vector<int>{}, total);
        } else {
            std::vector<int> col(len);
            for (const auto& [st, w] : cur) {
                const int prev_len = static_cast<int>(st.size());
                auto rec = [&](auto&& self, int a, const T& weight) -> void {
                    if (a == len) {
                        auto it = next.find(col);
                        if (it == next.end()) next.emplace(col, weight);
                        else it->second = it->second + weight;
                        return;
                    }
                    const int row = top + a;
                    int lo = a == 0 ? 1 : col[a - 1] + 1;
                    const int pa = row - prev_top;
                    if (pa >= 0 && pa < prev_len) lo = std::max(lo, st[pa]);
                    const int hi = m - (len - 1 - a);
                    for (int v = lo; v <= hi; ++v) {
                        col[a] = v;
                        self(self, a + 1, weight * loop_x(x, v, s.color(row, c)));
                    }
                };
                rec(rec, 0, w);
            }
        }
        cur.swap(next);
        prev_top = top;
        if (cur.empty()) return Arith<T>::zero();
    }
    T total = Arith<T>::zero();
    for (const auto& [st, w] : cur) total = total + w;
    return total;
}

// ---------------------------------------------------------------------------
// Jacobi-Trudi and the periodic matrix M~

/** det(E^(r + mu'_j - j + 1)_{lambda'_i - mu'_j + j - i}), i, j in [1, lambda_1]. */
template <class T>
T jacobi_trudi(const ColoredSkewShape& s, const Matrix<T>& x) {
    if (x.cols() != s.n) fail("bad-input", "point width differs from the shape period");
    const Partition lc = s.lambda.conjugate();
    const Partition mc = s.mu.conjugate();
    const int l = s.lambda[1];
    Matrix<T> A(l, l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) A(i, j) = loop_E(x, lc[i] - mc[j] + j - i, static_cast<long>(s.r) + mc[j] - j + 1);
    return det(A);
}

/** ceil((m + n - 1) / n) + 1 block diagonals cover every nonzero entry of M~. */
inline int default_depth(int m, int n) { return (m + n - 1 + n - 1) / n + 1; }

/** M~ with (M_d)_{ab} = E^(a)_{m + b - a - dn}. */
template <class T>
PeriodicMatrix<T> build_Mtilde(const Matrix<T>& x, int D = -1) {
    const int m = x.rows();
    const int n = x.cols();
    if (D < 0) D = default_depth(m, n);
    std::vector<Matrix<T>> blocks;
    for (int d = 0; d <= D; ++d) {
        Matrix<T> b(n, n);
        for (int a = 1; a <= n; ++a)
            for (int c = 1; c <= n; ++c) b(a, c) = loop_E(x, m + c - a - d * n, a);
        blocks.push_back(std::move(b));
    }
    auto P = build_periodic(n, std::move(blocks));
    P.closed = true;
    return P;
}

/** M = M(x_1, ..., x_m), the constant term of the folded M~. */
template <class T>
Matrix<T> build_M(const Matrix<T>& x) {
    return row_product(x);
}

struct MayaSets {
    IndexSet I;
    IndexSet J;
};

/** I(mu, r) = {mu'_a - a + 1 + r}, J(lambda, r) = {lambda'_a - a + 1 + r - m}, a in [1, lambda_1]. */
inline MayaSets maya_sets(const ColoredSkewShape& s, int m) {
    const Partition lc = s.lambda.conjugate();
    const Partition mc = s.mu.conjugate();
    MayaSets out;
    for (int a = 1; a <= s.lambda[1]; ++a) {
        out.I.push_back(mc[a] - a + 1 + s.r);
        out.J.push_back(lc[a] - a + 1 + s.r - m);
    }
    std::sort(out.I.begin(), out.I.end());
    std::sort(out.J.begin(), out.J.end());
    return out;
}

/** Every block [dn+1, dn+n] meets S in a final interval of the block. */
inline bool n_final(const IndexSet& S, int n) {
    std::map<long, std::vector<int>> by_block;
    for (int v : S) by_block[floor_div(v - 1, n)].push_back(v);
    for (auto& [d, vs] : by_block) {
        std::sort(vs.begin(), vs.end());
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (vs[vs.size() - 1 - k] != d * n + n - static_cast<long>(k)) return false;
    }
    return true;
}

/** Every block [dn+1, dn+n] meets S in an initial interval of the block. */
inline bool n_initial(const IndexSet& S, int n) {
    std::map<long, std::vector<int>> by_block;
    for (int v : S) by_block[floor_div(v - 1, n)].push_back(v);
    for (auto& [d, vs] : by_block) {
        std::sort(vs.begin(), vs.end());
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (vs[k] != d * n + 1 + static_cast<long>(k)) return false;
    }
    return true;
}

/** NW corners have color n and SE corners have color m modulo n. */
inline bool corner_color_ok(const ColoredSkewShape& s, int m) {
    for (auto [i, j] : s.nw_corners())
        if (s.color(i, j) != s.n) return false;
    for (auto [i, j] : s.se_corners())
        if (s.color(i, j) != mod1(m, s.n)) return false;
    return true;
}

inline bool has_empty_columns(const ColoredSkewShape& s) {
    const Partition lc = s.lambda.conjugate();
    const Partition mc = s.mu.conjugate();
    for (int c = 1; c <= s.lambda[1]; ++c)
        if (lc[c] == mc[c]) return true;
    return false;
}

/**
 * Removes empty columns without changing the colored cells: for an empty
 * column c, the columns to its left move down one row, the columns to its
 * right move left one column, and the color drops by one.
 */
inline ColoredSkewShape normalize_empty_columns(ColoredSkewShape s) {
    while (true) {
        const Partition lc = s.lambda.conjugate();
        const Partition mc = s.mu.conjugate();
        const int width = s.lambda[1];
        int empty = 0;
        for (int c = 1; c <= width && !empty; ++c)
            if (lc[c] == mc[c]) empty = c;
        if (!empty) return s;
        std::vector<int> nl, nm;
        for (int c = 1; c < empty; ++c) {
            nl.push_back(lc[c] + 1);
            nm.push_back(mc[c] + 1);
        }
        for (int c = empty + 1; c <= width; ++c) {
            nl.push_back(lc[c]);
            nm.push_back(mc[c]);
        }
        s = ColoredSkewShape(from_conjugate(nl), from_conjugate(nm), s.r - 1, s.n);
    }
}

// ---------------------------------------------------------------------------
// Shape invariants and Q-invariants

/** Box(i, j) = s^(j) of the rectangle (j - i + 1)^(m - i + 1); 1 when empty. */
template <class T>
T box_schur(const Matrix<T>& x, int i, int j) {
    const int m = x.rows();
    const int n = x.cols();
    if (i > m || j < i) return Arith<T>::one();
    return ssyt_sum(ColoredSkewShape(Partition::rectangle(j - i + 1, m - i + 1), Partition(), j, n), x);
}

/** S_k = Box(k, n) for k <= min(m, n); S_k = 1 beyond. */
template <class T>
T shape_invariant(const Matrix<T>& x, int k) {
    if (k < 1) fail("bad-input", "shape invariant index must be positive");
    if (k > std::min(x.rows(), x.cols())) return Arith<T>::one();
    return box_schur(x, k, x.cols());
}

/** S_k as the bottom-left minor Delta_{[k,n],[1,n-k+1]} of M. */
inline Rational shape_invariant_minor(const Matrix<Rational>& x, int k) {
    const int n = x.cols();
    if (k > std::min(x.rows(), n)) return Rational(1);
    return minor(build_M(x), interval(k, n), interval(1, n - k + 1));
}

struct QShape {
    ColoredSkewShape shape;
    int K = 0;
};

/** The colored shape (lambda_i^j / mu_i^j)^(n - j + 1) of the Q-invariant Q_i^(j). */
inline QShape q_shape(int i, int j, int m, int n) {
    if (i < 1 || j < 1 || j > n) fail("bad-input", "Q-invariant indices out of range");
    if (i + j > m) fail("not-Q-type", "Q_" + std::to_string(i) + "^(" + std::to_string(j) + ") needs i + j <= m");
    const int K = mod1(static_cast<long>(j) + i - m - 1 + 1, n) - 1;
    std::vector<int> lam(m - n + K, n - j + K + 1);
    for (int a = 0; a < m - i - j; ++a) lam.push_back(n - j);
    std::vector<int> mu(std::max(0, m - n + K - i), n - j + 1);
    return {ColoredSkewShape(Partition(lam), Partition(mu), n - j + 1, n), K};
}

template <class T>
T q_invariant(const Matrix<T>& x, int i, int j) {
    return ssyt_sum(q_shape(i, j, x.rows(), x.cols()).shape, x);
}

/** Q_i^(j) as a minor of M~ through its Maya sets. */
inline Rational q_invariant_minor(const Matrix<Rational>& x, int i, int j) {
    auto q = q_shape(i, j, x.rows(), x.cols());
    auto ms = maya_sets(q.shape, x.rows());
    return periodic_minor(build_Mtilde(x), ms.I, ms.J);
}

/** rQ_i^(j) = Q_i^(j) / (S_{j+1} S_{n+1-K}); rQ_0 = 1 and rQ_i = 0 for i < 0. */
template <class T>
T reduced_q_invariant(const Matrix<T>& x, int i, int j) {
    if (i == 0) return Arith<T>::one();
    if (i < 0) return Arith<T>::zero();
    auto q = q_shape(i, j, x.rows(), x.cols());
    return ssyt_sum(q.shape, x) / (shape_invariant(x, j + 1) * shape_invariant(x, x.cols() + 1 - q.K));
}

inline Rational reduced_q_invariant_minor(const Matrix<Rational>& x, int i, int j) {
    if (i == 0) return Rational(1);
    if (i < 0) return Rational(0);
    auto q = q_shape(i, j, x.rows(), x.cols());
    return q_invariant_minor(x, i, j) / (shape_invariant_minor(x, j + 1) * shape_invariant_minor(x, x.cols() + 1 - q.K));
}

// ---------------------------------------------------------------------------
// Barred loop functions. The barred variable xbar^j_(s) is x_i^j with
// i = s - j + 1 modulo m, which is the loop variable of the transpose with
// period m; every barred function is the unbarred one evaluated at x^t.

template <class T>
Matrix<T> build_Mbar(const Matrix<T>& x) {
    return column_product(x);
}

/** Delta_{A,B}(Mbar): determinant when subtraction exists, underway families otherwise. */
template <class T>
T mbar_minor(const Matrix<T>& x, const IndexSet& A, const IndexSet& B) {
    if constexpr (Arith<T>::has_subtraction && Arith<T>::has_division) {
        return minor(build_Mbar(x), A, B);
    } else {
        return underway_minor(x, A, B);
    }
}

template <class T>
T barred_E(const Matrix<T>& x, int k, long r) {
    return loop_E(x.transpose(), k, r);
}

template <class T>
T barred_H(const Matrix<T>& x, int k, long r) {
    return loop_H(x.transpose(), k, r);
}

/** Barred loop skew Schur function; the shape's period must be m. */
template <class T>
T barred_skew_schur(const ColoredSkewShape& s, const Matrix<T>& x) {
    return ssyt_sum(s, x.transpose());
}

// ---------------------------------------------------------------------------
// The modified matrix M~' and the determinant theorem

/**
 * M~' with block 0 equal to M' (entries (-1)^{n-i} S_i / S_{i+1} on the
 * anti-diagonal for i <= m, and 1 at (i, i - m)) and block d > 0 equal to
 * rQ^(a)_{m + b - a - dn} at (a, b).
 */
inline PeriodicMatrix<Rational> build_Mtilde_prime(const Matrix<Rational>& x, int D = -1) {
    const int m = x.rows();
    const int n = x.cols();
    if (D < 0) D = default_depth(m, n);
    std::vector<Rational> S(n + 2, Rational(1));
    for (int k = 1; k <= n + 1; ++k) S[k] = shape_invariant_minor(x, k);
    std::map<std::pair<int, int>, Rational> rq;
    auto rQ = [&](int k, int color) -> Rational {
        if (k <= 0) return Rational(k == 0 ? 1 : 0);
        auto it = rq.find({k, color});
        if (it != rq.end()) return it->second;
        Rational v = reduced_q_invariant_minor(x, k, color);
        rq.emplace(std::make_pair(k, color), v);
        return v;
    };
    std::vector<Matrix<Rational>> blocks;
    Matrix<Rational> b0(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i <= m && i + j == n + 1) b0(i, j) = ((n - i) % 2 == 0 ? 1 : -1) * S[i] / S[i + 1];
            else if (i - j == m) b0(i, j) = 1;
        }
    blocks.push_back(std::move(b0));
    for (int d = 1; d <= D; ++d) {
        Matrix<Rational> b(n, n);
        for (int a = 1; a <= n; ++a)
            for (int c = 1; c <= n; ++c) b(a, c) = rQ(m + c - a - d * n, a);
        blocks.push_back(std::move(b));
    }
    auto P = build_periodic(n, std::move(blocks));
    P.closed = true;
    return P;
}

/** Delta_{I(mu,r), J(lambda,r)}(M~') for a shape satisfying the corner color condition, M~' prebuilt. */
inline Rational theorem_det_formula(const ColoredSkewShape& shape, int m, const PeriodicMatrix<Rational>& Mprime) {
    ColoredSkewShape s = normalize_empty_columns(shape);
    if (!corner_color_ok(s, m)) fail("not-pseudo-energy", s.str() + " fails the corner color condition");
    auto ms = maya_sets(s, m);
    return periodic_minor(Mprime, ms.I, ms.J);
}

inline Rational theorem_det_formula(const ColoredSkewShape& shape, const Matrix<Rational>& x) {
    return theorem_det_formula(shape, x.rows(), build_Mtilde_prime(x));
}

// ---------------------------------------------------------------------------
// Upper uni-triangular reduction to anti-diagonal form

struct UVPair {
    Matrix<Rational> U;
    Matrix<Rational> V;
};

/** Inverse of an upper uni-triangular matrix by back substitution. */
inline Matrix<Rational> unitriangular_inverse(const Matrix<Rational>& A) {
    const int k = A.rows();
    for (int i = 1; i <= k; ++i) {
        if (A(i, i) != 1) fail("bad-input", "block is not uni-triangular");
        for (int j = 1; j < i; ++j)
            if (sgn(A(i, j)) != 0) fail("bad-input", "block is not upper triangular");
    }
    Matrix<Rational> X = Matrix<Rational>::identity(k);
    for (int j = 1; j <= k; ++j)
        for (int i = j - 1; i >= 1; --i) {
            Rational s = 0;
            for (int l = i + 1; l <= j; ++l) s += A(i, l) * X(l, j);
            X(i, j) = -s;
        }
    return X;
}

/** Anti-diagonal minor Delta_i = Delta_{[i,n],[1,n+1-i]}(N), with Delta_{n+1} = 1. */
inline Rational antidiagonal_minor(const Matrix<Rational>& N, int i) {
    const int n = N.rows();
    if (i > n) return Rational(1);
    return minor(N, interval(i, n), interval(1, n + 1 - i));
}

/**
 * U and V with U N V anti-diagonal (m >= n), or of the block form with an
 * identity (n-m) x (n-m) block in the bottom-left (m < n).
 */
inline UVPair build_UV(const Matrix<Rational>& N, int m) {
    const int n = N.rows();
    if (N.cols() != n) fail("minor-shape", "build_UV needs a square matrix");
    const int top = std::min(m, n);
    for (int i = 2; i <= top; ++i)
        if (sgn(antidiagonal_minor(N, i)) == 0) fail("degenerate-point", "vanishing anti-diagonal minor");
    auto sign = [](int k) { return k % 2 == 0 ? 1 : -1; };
    Matrix<Rational> U(n, n), V(n, n);
    for (int i = 1; i <= top; ++i) {
        Rational den = minor(N, interval(i + 1, n), interval(1, n - i));
        for (int j = i; j <= n; ++j) {
            IndexSet rows;
            for (int a = i; a <= n; ++a)
                if (a != j) rows.push_back(a);
            U(i, j) = sign(i + j) * minor(N, rows, interval(1, n - i)) / den;
        }
    }
    for (int j = n - top + 1; j <= n; ++j) {
        Rational den = minor(N, interval(n - j + 2, n), interval(1, j - 1));
        for (int i = 1; i <= j; ++i) {
            IndexSet cols;
            for (int b = 1; b <= j; ++b)
                if (b != i) cols.push_back(b);
            V(i, j) = sign(i + j) * minor(N, interval(n - j + 2, n), cols) / den;
        }
    }
    if (m < n) {
        Matrix<Rational> N3 = N.submatrix(interval(m + 1, n), interval(1, n - m));
        Matrix<Rational> inv = unitriangular_inverse(N3);
        for (int a = 1; a <= n - m; ++a)
            for (int b = 1; b <= n - m; ++b) U(m + a, m + b) = inv(a, b);
        for (int j = 1; j <= n - m; ++j) V(j, j) = 1;
    }
    return {U, V};
}

/** The matrix U N V is expected to equal: M' built from the anti-diagonal minors of N. */
inline Matrix<Rational> expected_UNV(const Matrix<Rational>& N, int m) {
    const int n = N.rows();
    Matrix<Rational> A(n, n);
    for (int i = 1; i <= std::min(m, n); ++i)
        A(i, n + 1 - i) = ((n - i) % 2 == 0 ? 1 : -1) * antidiagonal_minor(N, i) / antidiagonal_minor(N, i + 1);
    for (int j = 1; j + m <= n; ++j) A(m + j, j) = 1;
    return A;
}

/** N = [[B, 0], [C, A]] with B q x (q+1), A (p+1) x p, C (p+1) x (q+1). */
template <class T>
Matrix<T> assemble_block_matrix(const Matrix<T>& A, const Matrix<T>& B, const Matrix<T>& C, int p, int q) {
    if (A.rows() != p + 1 || A.cols() != p || B.rows() != q || B.cols() != q + 1 || C.rows() != p + 1 ||
        C.cols() != q + 1)
        fail("minor-shape", "block dimensions do not match p and q");
    const int N = p + q + 1;
    Matrix<T> M(N, N);
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q + 1; ++j) M(i, j) = B(i, j);
    for (int i = 1; i <= p + 1; ++i) {
        for (int j = 1; j <= q + 1; ++j) M(q + i, j) = C(i, j);
        for (int j = 1; j <= p; ++j) M(q + i, q + 1 + j) = A(i, j);
    }
    return M;
}

/** sum_{a,b} (-1)^{q+a+b} C_{ab} det(A without row a) det(B without column b). */
template <class T>
T block_det_expand(const Matrix<T>& A, const Matrix<T>& B, const Matrix<T>& C, int p, int q) {
    assemble_block_matrix(A, B, C, p, q);
    T total = Arith<T>::zero();
    for (int a = 1; a <= p + 1; ++a) {
        IndexSet rows;
        for (int k = 1; k <= p + 1; ++k)
            if (k != a) rows.push_back(k);
        T dA = det(A.submatrix(rows, interval(1, p)));
        for (int b = 1; b <= q + 1; ++b) {
            IndexSet cols;
            for (int k = 1; k <= q + 1; ++k)
                if (k != b) cols.push_back(k);
            T term = C(a, b) * dA * det(B.submatrix(interval(1, q), cols));
            total = ((q + a + b) % 2 == 0) ? total + term : total - term;
        }
    }
    return total;
}

}  // namespace lsym
