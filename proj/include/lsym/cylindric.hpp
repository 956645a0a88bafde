/**
 * @file cylindric.hpp
 * @brief Cylindric shapes and tableaux, cylindric loop Schur functions,
 *        border strip removal, and the folded determinant identities.
 *
 * A partition lambda is k-cylindric (for period n) when lambda_1 <= k and
 * lambda'_1 - lambda'_k <= n - k. The infinite shape of lambda/mu is the union
 * of its translates by (-(n-k), k); a filling of lambda/mu is a cylindric
 * tableau when its periodic extension is semistandard.
 */
#pragma once

#include <optional>

#include "lsym/loop_schur.hpp"

namespace lsym {

inline bool is_k_cylindric(const Partition& lam, int k, int n) {
    if (k < 1 || k > n) return false;
    if (lam[1] > k) return false;
    const Partition c = lam.conjugate();
    return c[1] - c[k] <= n - k;
}

struct CylShape {
    Partition lambda;
    Partition mu;
    int k = 1;
    int r = 1;
    int n = 1;

    CylShape() = default;
    CylShape(Partition l, Partition m, int k_, int r_, int n_) : lambda(std::move(l)), mu(std::move(m)), k(k_), n(n_) {
        if (!is_k_cylindric(lambda, k, n) || !is_k_cylindric(mu, k, n))
            fail("bad-input", "partitions are not " + std::to_string(k) + "-cylindric");
        if (!lambda.contains(mu)) fail("bad-input", "mu is not contained in lambda");
        r = mod1(r_, n);
    }

    ColoredSkewShape fundamental() const { return ColoredSkewShape(lambda, mu, r, n); }

    /** Membership of (i, j) in the infinite shape. */
    bool in_infinite(long i, long j) const {
        const long t = floor_div(j - 1, k);
        const int j0 = static_cast<int>(j - t * k);
        const long i0 = i + t * (n - k);
        const Partition lc = lambda.conjugate();
        const Partition mc = mu.conjugate();
        return mc[j0] < i0 && i0 <= lc[j0];
    }

    std::string str() const {
        return lambda.str() + "/" + mu.str() + "^(" + std::to_string(r) + ") k=" + std::to_string(k) +
               " n=" + std::to_string(n);
    }
};

/** The periodic extension of a filling is semistandard across the translate boundary. */
inline bool is_cylindric_tableau(const CylShape& s, const Filling& f) {
    auto value = [&](long i, long j) {
        const long t = floor_div(j - 1, s.k);
        return f[i + t * (s.n - s.k) - 1][j - t * s.k - 1];
    };
    for (auto [i, j] : s.fundamental().cells()) {
        if (s.in_infinite(i, j + 1) && value(i, j + 1) < value(i, j)) return false;
        if (s.in_infinite(i + 1, j) && value(i + 1, j) <= value(i, j)) return false;
    }
    return true;
}

inline std::vector<Filling> enumerate_cyl_tableaux(const CylShape& s, int m) {
    std::vector<Filling> out;
    for (auto& f : enumerate_ssyt(s.fundamental(), m))
        if (is_cylindric_tableau(s, f)) out.push_back(std::move(f));
    return out;
}

/** cs^(r)_{lambda/mu; k}(x): sum over cylindric tableaux with entries in [1, m]. */
template <class T>
T cyl_schur(const CylShape& s, const Matrix<T>& x) {
    if (x.cols() != s.n) fail("bad-input", "point width differs from the shape period");
    const ColoredSkewShape fs = s.fundamental();
    T total = Arith<T>::zero();
    for (const auto& f : enumerate_cyl_tableaux(s, x.rows())) total = total + tableau_weight(fs, f, x);
    return total;
}

/** R(lambda/mu) = lambda_flat/mu, removing a border strip of size n; empty when undefined. */
inline std::optional<CylShape> border_strip_remove(const CylShape& s) {
    const Partition lc = s.lambda.conjugate();
    if (lc[1] < s.n - s.k + 1) return std::nullopt;
    std::vector<int> flat;
    for (int a = 2; a <= s.k; ++a) flat.push_back(lc[a] - 1);
    flat.push_back(lc[1] - s.n + s.k - 1);
    Partition lam = from_conjugate(flat);
    if (!lam.contains(s.mu)) return std::nullopt;
    return CylShape(lam, s.mu, s.k, s.r, s.n);
}

/** R^d(s), or nothing when some iterate is undefined. */
inline std::optional<CylShape> border_strip_iterate(const CylShape& s, int d) {
    std::optional<CylShape> cur = s;
    for (int a = 0; a < d && cur; ++a) cur = border_strip_remove(*cur);
    return cur;
}

/** Largest d with R^d defined; R^0 is always defined for a genuine shape. */
inline int d_max(const CylShape& s) {
    int d = 0;
    std::optional<CylShape> cur = border_strip_remove(s);
    while (cur) {
        ++d;
        cur = border_strip_remove(*cur);
    }
    return d;
}

/** d_max for a pair of partitions, with -1 when mu is not inside lambda. */
inline int d_max(const Partition& lam, const Partition& mu, int k, int r, int n) {
    if (!lam.contains(mu)) return -1;
    return d_max(CylShape(lam, mu, k, r, n));
}

/**
 * Length of the shortest diagonal j - i = c of the infinite shape, scanning
 * the translates t of every fundamental column that can meet the diagonal.
 */
inline int shortest_diagonal(const CylShape& s) {
    const Partition lc = s.lambda.conjugate();
    const Partition mc = s.mu.conjugate();
    int best = -1;
    for (int c = 0; c < s.n; ++c) {
        int count = 0;
        const int reach = lc[1] + s.k + 2 * s.n;
        for (int t = -reach; t <= reach; ++t)
            for (int j0 = 1; j0 <= s.k; ++j0) {
                const long j = j0 + static_cast<long>(t) * s.k;
                const long i = j - c;
                if (s.in_infinite(i, j)) ++count;
            }
        if (best < 0 || count < best) best = count;
    }
    return best;
}

struct CylMaya {
    IndexSet I;      // I(mu, r), unreduced
    IndexSet J;      // J(lambda, r), unreduced
    IndexSet I_hat;  // reduced into [n]
    IndexSet J_hat;
    int d_star = 0;  // d_*(J) - d_*(I)
};

/** d_*(S) = sum of d_a with s_a + d_a n in [n]. */
inline int d_star(const IndexSet& S, int n) {
    int d = 0;
    for (int v : S) d += static_cast<int>(-floor_div(v - 1, n));
    return d;
}

inline CylMaya cyl_maya(const Partition& lam, const Partition& mu, int r, int k, int m, int n) {
    const Partition lc = lam.conjugate();
    const Partition mc = mu.conjugate();
    CylMaya out;
    for (int a = 1; a <= k; ++a) {
        out.I.push_back(mc[a] - a + 1 + r);
        out.J.push_back(lc[a] - a + 1 + r - m);
    }
    std::sort(out.I.begin(), out.I.end());
    std::sort(out.J.begin(), out.J.end());
    for (int v : out.I) out.I_hat.push_back(mod1(v, n));
    for (int v : out.J) out.J_hat.push_back(mod1(v, n));
    std::sort(out.I_hat.begin(), out.I_hat.end());
    std::sort(out.J_hat.begin(), out.J_hat.end());
    out.d_star = d_star(out.J, n) - d_star(out.I, n);
    return out;
}

/** (mu_I)' = (i_1 - k, i_2 - (k-1), ..., i_k - 1) for I = {i_k < ... < i_1}. */
inline Partition mu_of_I(IndexSet I) {
    std::sort(I.rbegin(), I.rend());
    const int k = static_cast<int>(I.size());
    std::vector<int> conj;
    for (int a = 0; a < k; ++a) conj.push_back(I[a] - (k - a));
    return from_conjugate(conj);
}

/** (lambda_J)' = (m + j_1 - k, ..., m + j_k - 1) for J = {j_k < ... < j_1}. */
inline Partition lambda_of_J(IndexSet J, int m) {
    std::sort(J.rbegin(), J.rend());
    const int k = static_cast<int>(J.size());
    std::vector<int> conj;
    for (int a = 0; a < k; ++a) conj.push_back(m + J[a] - (k - a));
    return from_conjugate(conj);
}

/** The folded matrix M^(t) of the point. */
inline Matrix<TPoly<Rational>> folded_M(const Matrix<Rational>& x) { return fold(build_Mtilde(x)); }

/** Part 1: (-1)^{(k-1) d_*} [t^{d_*}] Delta_{I^, J^}(M^(t)). */
inline Rational cyl_jt_part1(const CylShape& s, const Matrix<TPoly<Rational>>& Mhat, int m) {
    CylMaya cm = cyl_maya(s.lambda, s.mu, s.r, s.k, m, s.n);
    if (cm.d_star < 0) return Rational(0);
    TPoly<Rational> d = minor(Mhat, cm.I_hat, cm.J_hat);
    Rational c = d.coeff(cm.d_star);
    return ((s.k - 1) * cm.d_star) % 2 == 0 ? c : Rational(-c);
}

/** Part 2 right-hand side: sum over d of ((-1)^{k-1} t)^d cs^(k)_{R^d(lambda_J/mu_I); k}. */
inline TPoly<Rational> cyl_jt_part2_rhs(const IndexSet& I, const IndexSet& J, const Matrix<Rational>& x) {
    const int m = x.rows();
    const int n = x.cols();
    const int k = static_cast<int>(I.size());
    Partition lam = lambda_of_J(J, m);
    Partition mu = mu_of_I(I);
    if (!lam.contains(mu)) return TPoly<Rational>();
    std::vector<Rational> coeffs;
    std::optional<CylShape> cur = CylShape(lam, mu, k, k, n);
    for (int d = 0; cur; ++d) {
        Rational v = cyl_schur(*cur, x);
        coeffs.push_back(((k - 1) * d) % 2 == 0 ? v : Rational(-v));
        cur = border_strip_remove(*cur);
    }
    return TPoly<Rational>(std::move(coeffs));
}

/** nu^i = ((n-i+1)^{m-i+1}) as an (n-i+1)-cylindric shape of color n. */
inline CylShape nu_shape(int i, int m, int n) {
    return CylShape(Partition::rectangle(n - i + 1, m - i + 1), Partition(), n - i + 1, n, n);
}

/** Right-hand side of the bottom-left folded identity for Delta_{[i,n],[1,n-i+1]}. */
inline TPoly<Rational> bottom_left_folded_rhs(int i, const Matrix<Rational>& x) {
    const int m = x.rows();
    const int n = x.cols();
    if (i == n + 1) return TPoly<Rational>(Rational(1));
    std::vector<Rational> coeffs;
    const int dmax = std::max(0, m - 2 * i + 2);
    for (int d = 0; d <= dmax; ++d) {
        auto s = border_strip_iterate(nu_shape(i, m, n), d);
        Rational v = s ? cyl_schur(*s, x) : Rational(0);
        coeffs.push_back(((n - i) * d) % 2 == 0 ? v : Rational(-v));
    }
    return TPoly<Rational>(std::move(coeffs));
}

/**
 * Sum over X in C([a+i-1, b-i+1], b-a-2i+3-d) of
 * Delta_{X u [b-i+2, b], [a, a+i-2] u X}(Mbar).
 */
template <class T>
T folded_sum_of_minors(const Matrix<T>& Mbar, int i, int a, int b, int d) {
    T total = Arith<T>::zero();
    for (const auto& X : combinations(interval(a + i - 1, b - i + 1), b - a - 2 * i + 3 - d)) {
        IndexSet rows = set_union(X, interval(b - i + 2, b));
        IndexSet cols = set_union(interval(a, a + i - 2), X);
        if constexpr (Arith<T>::has_subtraction) total = total + minor(Mbar, rows, cols);
        else fail("needs-subtraction", "use underway families in min-plus mode");
    }
    return total;
}

/** cs^(n+a-1)_{R^d((n-i+1)^{b-a-i+2}); n-i+1}(x_a, ..., x_b), with rows a..b relabeled from 1. */
template <class T>
T folded_cs_ab(const Matrix<T>& x, int i, int a, int b, int d) {
    const int n = x.cols();
    Matrix<T> y = x.submatrix(interval(a, b), interval(1, n));
    CylShape base(Partition::rectangle(n - i + 1, b - a - i + 2), Partition(), n - i + 1, n, n);
    auto s = border_strip_iterate(base, d);
    return s ? cyl_schur(*s, y) : Arith<T>::zero();
}

/**
 * For a shape whose infinite version has an empty column c in [1, k], the
 * connected piece made of the columns strictly between two consecutive empty
 * columns, as an ordinary colored skew shape.
 */
inline std::optional<ColoredSkewShape> cyl_component(const CylShape& s) {
    const Partition lc = s.lambda.conjugate();
    const Partition mc = s.mu.conjugate();
    int c = 0;
    for (int a = 1; a <= s.k && !c; ++a)
        if (lc[a] == mc[a]) c = a;
    if (!c) return std::nullopt;
    // Columns c+1, ..., c+k-1 of the infinite shape.
    std::vector<long> top, bot;
    for (int t = 1; t < s.k; ++t) {
        const long j = c + t;
        const long q = floor_div(j - 1, s.k);
        const int j0 = static_cast<int>(j - q * s.k);
        top.push_back(mc[j0] - q * (s.n - s.k));
        bot.push_back(lc[j0] - q * (s.n - s.k));
    }
    long low = 0;
    for (long v : top) low = std::min(low, v);
    std::vector<int> nl, nm;
    for (std::size_t a = 0; a < top.size(); ++a) {
        nl.push_back(static_cast<int>(bot[a] - low));
        nm.push_back(static_cast<int>(top[a] - low));
    }
    // Cell (i, j) of the infinite shape moves to (i - low, j - c), keeping its color.
    return ColoredSkewShape(from_conjugate(nl), from_conjugate(nm), s.r + low - c, s.n);
}

}  // namespace lsym
