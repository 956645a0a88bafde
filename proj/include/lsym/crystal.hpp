/**
 * @file crystal.hpp
 * @brief Basic geometric crystals, their products, and geometric R-matrices.
 *
 * A point x of Mat_{m x n} is a Matrix<T> with x(i, j) = x_i^j. Its columns
 * x^1, ..., x^n are points of the basic crystal X_m and make x a point of
 * (X_m)^n; the operators e_i act on rows i and i+1. Its rows make x a point
 * of (X_n)^m; the barred operators ebar_j act on columns j and j+1 and are
 * computed by transposing.
 *
 * Everything here is subtraction-free, so it runs over Rational and Trop.
 */
#pragma once

#include <utility>
#include <vector>

#include "lsym/matrix.hpp"

namespace lsym {

template <class T>
using Vec = std::vector<T>;

template <class T>
struct CrystalReadout {
    Vec<T> gamma;
    T eps;
    T phi;
};

template <class T>
Vec<T> row_of(const Matrix<T>& x, int i) {
    Vec<T> r;
    for (int j = 1; j <= x.cols(); ++j) r.push_back(x(i, j));
    return r;
}

template <class T>
Vec<T> column_of(const Matrix<T>& x, int j) {
    Vec<T> c;
    for (int i = 1; i <= x.rows(); ++i) c.push_back(x(i, j));
    return c;
}

/** W(x): lower bidiagonal, diagonal x, subdiagonal 1. */
template <class T>
Matrix<T> whirl(const Vec<T>& x) {
    const int m = static_cast<int>(x.size());
    Matrix<T> w(m, m);
    for (int i = 1; i <= m; ++i) {
        w(i, i) = x[i - 1];
        if (i < m) w(i + 1, i) = Arith<T>::one();
    }
    return w;
}

/** M(v_1, ..., v_k) = W(v_1) ... W(v_k); the identity of size `size` when k = 0. */
template <class T>
Matrix<T> prod_M(const std::vector<Vec<T>>& factors, int size) {
    Matrix<T> M = Matrix<T>::identity(size);
    for (const auto& f : factors) M = M * whirl(f);
    return M;
}

/** M(x^1, ..., x^n), the m x m product over the columns of x. */
template <class T>
Matrix<T> column_product(const Matrix<T>& x) {
    std::vector<Vec<T>> cols;
    for (int j = 1; j <= x.cols(); ++j) cols.push_back(column_of(x, j));
    return prod_M(cols, x.rows());
}

/** M(x_1, ..., x_k), the n x n product over the first k rows of x. */
template <class T>
Matrix<T> row_product(const Matrix<T>& x, int k) {
    std::vector<Vec<T>> rows;
    for (int i = 1; i <= k; ++i) rows.push_back(row_of(x, i));
    return prod_M(rows, x.cols());
}

template <class T>
Matrix<T> row_product(const Matrix<T>& x) {
    return row_product(x, x.rows());
}

template <class T>
CrystalReadout<T> basic_maps(const Vec<T>& x, int i) {
    return {x, x[i], x[i - 1]};
}

template <class T>
Vec<T> basic_e(Vec<T> x, int i, const T& c) {
    x[i - 1] = x[i - 1] * c;
    x[i] = x[i] / c;
    return x;
}

/** (eps_i, phi_i) of the left prefix (x^1, ..., x^k) via the two-factor product rule. */
template <class T>
std::vector<std::pair<T, T>> prefix_eps_phi(const Matrix<T>& x, int i) {
    std::vector<std::pair<T, T>> out;
    T eps = x(i + 1, 1);
    T phi = x(i, 1);
    out.emplace_back(eps, phi);
    for (int k = 2; k <= x.cols(); ++k) {
        T e2 = x(i + 1, k);
        T p2 = x(i, k);
        T den = eps + p2;
        T ne = eps * e2 / den;
        T np = phi * p2 / den;
        eps = ne;
        phi = np;
        out.emplace_back(eps, phi);
    }
    return out;
}

/** gamma, eps_i, phi_i of x in (X_m)^n by the recursive product formulas. */
template <class T>
CrystalReadout<T> product_maps_recursive(const Matrix<T>& x, int i) {
    auto pre = prefix_eps_phi(x, i);
    Vec<T> gamma(x.rows(), Arith<T>::one());
    for (int r = 1; r <= x.rows(); ++r)
        for (int k = 1; k <= x.cols(); ++k) gamma[r - 1] = gamma[r - 1] * x(r, k);
    return {gamma, pre.back().first, pre.back().second};
}

/** gamma, eps_i, phi_i of x in (X_m)^n read off from M(x^1, ..., x^n). */
template <class T>
CrystalReadout<T> product_maps(const Matrix<T>& x, int i) {
    Matrix<T> M = column_product(x);
    Vec<T> gamma;
    for (int r = 1; r <= M.rows(); ++r) gamma.push_back(M(r, r));
    return {gamma, M(i + 1, i + 1) / M(i + 1, i), M(i, i) / M(i + 1, i)};
}

/**
 * e_i^c on (X_m)^n. The product is folded to the left, so the last column
 * receives c / c^+ and the prefix receives c^+, recursively.
 */
template <class T>
Matrix<T> apply_e(const Matrix<T>& x, int i, const T& c) {
    if (i < 1 || i >= x.rows()) fail("bad-input", "crystal index out of range");
    auto pre = prefix_eps_phi(x, i);
    Matrix<T> y = x;
    T cur = c;
    for (int k = x.cols(); k >= 2; --k) {
        const T& eps_prefix = pre[k - 2].first;
        T phi_col = x(i, k);
        T cplus = (cur * phi_col + eps_prefix) / (phi_col + eps_prefix);
        T ck = cur / cplus;
        y(i, k) = y(i, k) * ck;
        y(i + 1, k) = y(i + 1, k) / ck;
        cur = cplus;
    }
    y(i, 1) = y(i, 1) * cur;
    y(i + 1, 1) = y(i + 1, 1) / cur;
    return y;
}

/** ebar_j^c: the GL_n operator acting on columns j and j+1. */
template <class T>
Matrix<T> apply_e_bar(const Matrix<T>& x, int j, const T& c) {
    return apply_e(x.transpose(), j, c).transpose();
}

template <class T>
CrystalReadout<T> bar_maps(const Matrix<T>& x, int j) {
    return product_maps(x.transpose(), j);
}

/** Weyl reflection s_i = e_i^{eps_i / phi_i}. */
template <class T>
Matrix<T> reflect(const Matrix<T>& x, int i) {
    auto r = product_maps_recursive(x, i);
    return apply_e(x, i, T(r.eps / r.phi));
}

/** kappa_r(x, y) with subscripts modulo n, r in [1, n]. */
template <class T>
T kappa(const Vec<T>& x, const Vec<T>& y, int r) {
    const int n = static_cast<int>(x.size());
    auto at = [n](const Vec<T>& v, int idx) -> const T& { return v[((idx - 1) % n + n) % n]; };
    T total = Arith<T>::zero();
    for (int k = 0; k <= n - 1; ++k) {
        T term = Arith<T>::one();
        for (int s = r; s <= r + k - 1; ++s) term = term * at(y, s);
        for (int s = r + k + 1; s <= r + n - 1; ++s) term = term * at(x, s);
        total = total + term;
    }
    return total;
}

/** The geometric R-matrix R(x, y) = (y', x'). */
template <class T>
std::pair<Vec<T>, Vec<T>> geometric_R(const Vec<T>& x, const Vec<T>& y) {
    const int n = static_cast<int>(x.size());
    if (static_cast<int>(y.size()) != n) fail("bad-input", "R-matrix arguments differ in length");
    Vec<T> kap;
    for (int r = 1; r <= n; ++r) kap.push_back(kappa(x, y, r));
    Vec<T> yp, xp;
    for (int j = 1; j <= n; ++j) {
        const T& kj = kap[j - 1];
        const T& kj1 = kap[j % n];
        yp.push_back(y[j - 1] * kj1 / kj);
        xp.push_back(x[j - 1] * kj / kj1);
    }
    return {yp, xp};
}

/** R_i: geometric R-matrix on rows i, i+1 (rows are points of X_n). */
template <class T>
Matrix<T> row_R(const Matrix<T>& x, int i) {
    auto [yp, xp] = geometric_R(row_of(x, i), row_of(x, i + 1));
    Matrix<T> out = x;
    for (int j = 1; j <= x.cols(); ++j) {
        out(i, j) = yp[j - 1];
        out(i + 1, j) = xp[j - 1];
    }
    return out;
}

/** Rbar_j: geometric R-matrix on columns j, j+1. */
template <class T>
Matrix<T> col_R(const Matrix<T>& x, int j) {
    return row_R(x.transpose(), j).transpose();
}

}  // namespace lsym
