/**
 * @file gt.hpp
 * @brief Gelfand-Tsetlin patterns, the maps Phi and Psi, the GT geometric
 *        crystal, geometric RSK, and the decoration.
 *
 * A pattern in GT_n^{<=m} has entries z_{i,j} for 1 <= i <= p = min(m, n)
 * and i <= j <= n. Here n is the height (the size of Phi(z)) and m bounds the
 * number of rows of the corresponding tableau. gRSK sends an m x n matrix to
 * P in GT_n^{<=m} and Q in GT_m^{<=n}.
 */
#pragma once

#include <map>
#include <utility>

#include "lsym/crystal.hpp"
#include "lsym/network.hpp"

namespace lsym {

template <class T>
struct GTPattern {
    int m = 0;  // width bound
    int n = 0;  // height
    std::map<std::pair<int, int>, T> z;

    GTPattern() = default;
    GTPattern(int m_, int n_) : m(m_), n(n_) {
        for (int i = 1; i <= p(); ++i)
            for (int j = i; j <= n; ++j) z[{i, j}] = Arith<T>::one();
    }

    int p() const { return std::min(m, n); }
    bool contains(int i, int j) const { return i >= 1 && i <= p() && j >= i && j <= n; }

    T& operator()(int i, int j) {
        if (!contains(i, j)) fail("bad-input", "pattern index (" + std::to_string(i) + "," + std::to_string(j) + ") outside the trapezoid");
        return z.at({i, j});
    }
    const T& operator()(int i, int j) const {
        if (!contains(i, j)) fail("bad-input", "pattern index (" + std::to_string(i) + "," + std::to_string(j) + ") outside the trapezoid");
        return z.at({i, j});
    }

    std::vector<T> shape() const {
        std::vector<T> s;
        for (int i = 1; i <= p(); ++i) s.push_back((*this)(i, n));
        return s;
    }

    friend bool operator==(const GTPattern& a, const GTPattern& b) {
        if (a.m != b.m || a.n != b.n) return false;
        for (const auto& [k, v] : a.z)
            if (!(b.z.at(k) == v)) return false;
        return true;
    }
    friend bool operator!=(const GTPattern& a, const GTPattern& b) { return !(a == b); }
};

template <class T>
struct PQPair {
    GTPattern<T> P;  // GT_n^{<=m}
    GTPattern<T> Q;  // GT_m^{<=n}
};

/**
 * Layers W^p(...), ..., W^1(...) of the network Gamma_n^{<=m}. Layer W^i has
 * diagonal 1 above row i, z_{i,i} at row i and z_{i,k}/z_{i,k-1} below it,
 * and may step from row k+1 to row k only when k >= i.
 */
template <class T>
std::vector<Layer<T>> gamma_layers(const GTPattern<T>& z) {
    std::vector<Layer<T>> layers;
    for (int i = z.p(); i >= 1; --i) {
        Layer<T> L(1, z.n);
        for (int k = 1; k <= z.n; ++k) {
            if (k < i) L.diag[k - 1] = Arith<T>::one();
            else if (k == i) L.diag[k - 1] = z(i, i);
            else L.diag[k - 1] = z(i, k) / z(i, k - 1);
            L.can_step[k - 1] = (k - 1 >= i) ? 1 : 0;
        }
        layers.push_back(std::move(L));
    }
    return layers;
}

/** Phi_n^{<=m}(z) as an explicit product of the row matrices. */
template <class T>
Matrix<T> phi(const GTPattern<T>& z) {
    Matrix<T> M = Matrix<T>::identity(z.n);
    for (int i = z.p(); i >= 1; --i) {
        Matrix<T> W(z.n, z.n);
        for (int k = 1; k <= z.n; ++k) {
            if (k < i) W(k, k) = Arith<T>::one();
            else if (k == i) W(k, k) = z(i, i);
            else W(k, k) = z(i, k) / z(i, k - 1);
            if (k >= i && k < z.n) W(k + 1, k) = Arith<T>::one();
        }
        M = M * W;
    }
    return M;
}

/** Delta_{I,J}(Phi(z)) by non-intersecting families in Gamma. */
template <class T>
T gamma_minor(const GTPattern<T>& z, const IndexSet& I, const IndexSet& J) {
    return chain_minor(gamma_layers(z), I, J);
}

/** Psi: z_{i,j} = Delta_{[i,j]}(A) / Delta_{[i+1,j]}(A), for an n x n matrix A. */
template <class T>
GTPattern<T> psi(const Matrix<T>& A, int m) {
    GTPattern<T> z(m, A.rows());
    for (int i = 1; i <= z.p(); ++i)
        for (int j = i; j <= z.n; ++j) {
            T den = flag_minor(A, i + 1, j);
            if (Arith<T>::is_zero(den)) fail("degenerate-point", "vanishing flag minor in Psi");
            z(i, j) = flag_minor(A, i, j) / den;
        }
    return z;
}

template <class T>
CrystalReadout<T> gt_maps(const GTPattern<T>& z, int j) {
    Matrix<T> M = phi(z);
    std::vector<T> gamma;
    for (int k = 1; k <= z.n; ++k) gamma.push_back(M(k, k));
    return {gamma, M(j + 1, j + 1) / M(j + 1, j), M(j, j) / M(j + 1, j)};
}

/** ebar_j^c on GT_n^{<=m}: conjugate Phi(z) by unipotents and apply Psi. */
template <class T>
GTPattern<T> gt_apply_e(const GTPattern<T>& z, int j, const T& c) {
    if (j < 1 || j >= z.n) fail("bad-input", "GT crystal index out of range");
    Matrix<T> M = phi(z);
    T phij = M(j, j) / M(j + 1, j);
    T epsj = M(j + 1, j + 1) / M(j + 1, j);
    T one = Arith<T>::one();
    Matrix<T> left = unipotent<T>(z.n, j, T((c - one) * phij));
    Matrix<T> right = unipotent<T>(z.n, j, T((one / c - one) * epsj));
    return psi(Matrix<T>(left * M * right), z.m);
}

/** gRSK through the row-product minors, evaluated by highway families. */
template <class T>
PQPair<T> grsk(const Matrix<T>& x) {
    const int m = x.rows();
    const int n = x.cols();
    PQPair<T> out{GTPattern<T>(m, n), GTPattern<T>(n, m)};
    auto flag = [&](int k, int a, int b) {
        if (b < a) return Arith<T>::one();
        return row_product_minor(x, k, interval(a, b), interval(1, b - a + 1));
    };
    for (int i = 1; i <= out.P.p(); ++i)
        for (int j = i; j <= n; ++j) out.P(i, j) = flag(m, i, j) / flag(m, i + 1, j);
    for (int jp = 1; jp <= out.Q.p(); ++jp)
        for (int ip = jp; ip <= m; ++ip) out.Q(jp, ip) = flag(ip, jp, n) / flag(ip, jp + 1, n);
    return out;
}

/** gRSK through the column-product minors, evaluated by underway families. */
template <class T>
PQPair<T> grsk_transposed(const Matrix<T>& x) {
    const int m = x.rows();
    const int n = x.cols();
    PQPair<T> out{GTPattern<T>(m, n), GTPattern<T>(n, m)};
    auto flag = [&](int k, int a, int b) {
        if (b < a) return Arith<T>::one();
        return column_product_minor(x, k, interval(a, b), interval(1, b - a + 1));
    };
    for (int i = 1; i <= out.P.p(); ++i)
        for (int j = i; j <= n; ++j) out.P(i, j) = flag(j, i, m) / flag(j, i + 1, m);
    for (int jp = 1; jp <= out.Q.p(); ++jp)
        for (int ip = jp; ip <= m; ++ip) out.Q(jp, ip) = flag(n, jp, ip) / flag(n, jp + 1, ip);
    return out;
}

/** gRSK with P = Psi(M(x_1, ..., x_m)) and Q = Psi(M(x^1, ..., x^n)) by determinants. */
inline PQPair<Rational> grsk_psi(const Matrix<Rational>& x) {
    return {psi(row_product(x), x.rows()), psi(column_product(x), x.cols())};
}

/** The m x n matrix with P in the bottom-left corner and Q transposed in the top-right. */
template <class T>
Matrix<T> glue(const PQPair<T>& pq) {
    const int m = pq.Q.n;
    const int n = pq.P.n;
    Matrix<T> g(m, n);
    for (const auto& [k, v] : pq.P.z) g(m + 1 - k.first, k.second - k.first + 1) = v;
    for (const auto& [k, v] : pq.Q.z) g(k.second - k.first + 1, n + 1 - k.first) = v;
    return g;
}

/** Inverse of glue for a given m x n matrix. */
template <class T>
PQPair<T> unglue(const Matrix<T>& g) {
    const int m = g.rows();
    const int n = g.cols();
    PQPair<T> pq{GTPattern<T>(m, n), GTPattern<T>(n, m)};
    for (auto& [k, v] : pq.P.z) v = g(m + 1 - k.first, k.second - k.first + 1);
    for (auto& [k, v] : pq.Q.z) v = g(k.second - k.first + 1, n + 1 - k.first);
    return pq;
}

/** Decoration F(z) from its defining sum. */
template <class T>
T decoration_gt(const GTPattern<T>& z) {
    const int m = z.m;
    const int n = z.n;
    T F = Arith<T>::zero();
    for (int i = 1; i <= std::min(m, n); ++i)
        for (int j = i; j <= n - 1; ++j) F = F + z(i, j + 1) / z(i, j);
    for (int i = 1; i <= std::min(m - 1, n); ++i)
        for (int j = i; j <= n - 1; ++j)
            if (z.contains(i + 1, j + 1)) F = F + z(i, j) / z(i + 1, j + 1);
    if (m < n) F = F + z(m, m);
    return F;
}

/** Decoration F(z) from flag-type minors of Phi(z). */
inline Rational decoration_gt_minors(const GTPattern<Rational>& z) {
    const int m = z.m;
    const int n = z.n;
    Matrix<Rational> M = phi(z);
    auto D = [&](const IndexSet& I, const IndexSet& J) { return minor(M, I, J); };
    Rational F = 0;
    for (int k = 1; k <= std::min(m - 1, n - 1); ++k) {
        IndexSet rows_a = set_union({k}, interval(k + 2, n));
        IndexSet cols_b = set_union(interval(1, n - k - 1), {n - k + 1});
        Rational den = D(interval(k + 1, n), interval(1, n - k));
        F += (D(rows_a, interval(1, n - k)) + D(interval(k + 1, n), cols_b)) / den;
    }
    if (m < n) {
        F += D(set_union({m}, interval(m + 2, n)), interval(1, n - m)) / D(interval(m + 1, n), interval(1, n - m));
        for (int j = 1; j <= n - m; ++j) {
            IndexSet cols = set_union(interval(1, j - 1), {j + 1});
            F += D(interval(m + 1, m + j), cols) / D(interval(m + 1, m + j), interval(1, j));
        }
    }
    return F;
}

/** F(x) = sum of all entries of the matrix. */
template <class T>
T decoration_mat(const Matrix<T>& x) {
    T F = Arith<T>::zero();
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j) F = F + x(i, j);
    return F;
}

}  // namespace lsym
