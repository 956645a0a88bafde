/**
 * @file energy.hpp
 * @brief Central charge, geometric energy and its product formulas, geometric
 *        cocharge and the Kirillov-Berenstein pattern sums.
 *
 * Everything here is subtraction-free except where noted, so the same
 * templates evaluate exactly over Rational and in the min-plus semiring.
 * Minors of Mbar and Phi(z) go through determinants when the value type has
 * subtraction and through non-intersecting path families otherwise.
 */
#pragma once

#include <algorithm>
#include <vector>

#include "lsym/gt.hpp"
#include "lsym/loop_schur.hpp"

namespace lsym {

// ---------------------------------------------------------------------------
// Central charge

/** rho_k = (n-k+1)^(m-k+1) with color n. */
inline ColoredSkewShape rho_shape(int k, int m, int n) {
    return ColoredSkewShape(Partition::rectangle(n - k + 1, m - k + 1), Partition(), n, n);
}

/** rho_{k,down}: rho_k with one cell added below its first column. */
inline ColoredSkewShape rho_down(int k, int m, int n, int color) {
    std::vector<int> lam(m - k + 1, n - k + 1);
    lam.push_back(1);
    return ColoredSkewShape(Partition(lam), Partition(), color, n);
}

/** rho_{k,up}: rho_k shifted down one row, with one cell added above its last column. */
inline ColoredSkewShape rho_up(int k, int m, int n, int color) {
    return ColoredSkewShape(Partition::rectangle(n - k + 1, m - k + 2), Partition::rectangle(n - k, 1), color, n);
}

/** Default colors: n for rho_down and n - 1 for rho_up, so the rectangle keeps color n. */
inline int rho_down_color(int n) { return n; }
inline int rho_up_color(int n) { return mod1(n - 1, n); }

/** Route A: Delta(x) = F(Q) + delta_{mn} S_n with Q the gRSK Q-pattern. */
template <class T>
T central_charge_A(const Matrix<T>& x) {
    const int m = x.rows();
    const int n = x.cols();
    T out = decoration_gt(grsk(x).Q);
    if (m == n) out = out + shape_invariant(x, n);
    return out;
}

/** Route B: sum_{j <= min(m-1, n)} rQ_1^(j) + delta_{mn} E_1^(n). */
template <class T>
T central_charge_B(const Matrix<T>& x) {
    const int m = x.rows();
    const int n = x.cols();
    T out = Arith<T>::zero();
    for (int j = 1; j <= std::min(m - 1, n); ++j) out = out + reduced_q_invariant(x, 1, j);
    if (m == n) out = out + loop_E(x, 1, n);
    return out;
}

/** Delta(x) = F(x) - F(P), the central charge by its definition. */
inline Rational central_charge_def(const Matrix<Rational>& x) {
    return decoration_mat(x) - decoration_gt(grsk(x).P);
}

/**
 * Right side of the decomposition of rQ_1^(j) for 1 <= j <= min(m-1, n):
 * E_1^(j) - [j < n] s_{rho_{j+1,up}} / S_{j+1} - [K > 0] s_{rho_{n-K+1,down}} / S_{n-K+1}
 * with K = (j - m) mod n in [0, n-1].
 */
inline Rational q_decomposition_rhs(const Matrix<Rational>& x, int j, int up_color, int down_color) {
    const int m = x.rows();
    const int n = x.cols();
    if (j < 1 || j > std::min(m - 1, n)) fail("bad-input", "decomposition index out of range");
    const int K = mod1(static_cast<long>(j) - m + 1, n) - 1;
    Rational out = loop_E(x, 1, j);
    if (j < n) out -= ssyt_sum(rho_up(j + 1, m, n, up_color), x) / shape_invariant(x, j + 1);
    if (K > 0) out -= ssyt_sum(rho_down(n - K + 1, m, n, down_color), x) / shape_invariant(x, n - K + 1);
    return out;
}

inline Rational q_decomposition_rhs(const Matrix<Rational>& x, int j) {
    return q_decomposition_rhs(x, j, rho_up_color(x.cols()), rho_down_color(x.cols()));
}

/**
 * F(P) through rho shapes: sum_{k=2}^{min(m,n)} (s_{rho_{k,up}} + s_{rho_{k,down}}) / S_k,
 * plus sum_{j=m}^{n} E_1^(j) when m < n.
 */
template <class T>
T decoration_P_rho(const Matrix<T>& x) {
    const int m = x.rows();
    const int n = x.cols();
    T out = Arith<T>::zero();
    for (int k = 2; k <= std::min(m, n); ++k)
        out = out + (ssyt_sum(rho_up(k, m, n, rho_up_color(n)), x) + ssyt_sum(rho_down(k, m, n, rho_down_color(n)), x)) /
                        shape_invariant(x, k);
    if (m < n)
        for (int j = m; j <= n; ++j) out = out + loop_E(x, 1, j);
    return out;
}

// ---------------------------------------------------------------------------
// Geometric energy

/** The colored stretched staircase ((n-1)(m-1), ..., n-1)^(n). */
inline ColoredSkewShape energy_shape(int m, int n) {
    std::vector<int> lam;
    for (int k = m - 1; k >= 1; --k) lam.push_back((n - 1) * k);
    return ColoredSkewShape(Partition(lam), Partition(), n, n);
}

/** D(x) = s^(n)_{(n-1) delta_{m-1}}(x_1, ..., x_m) as a tableau sum. */
template <class T>
T energy_D(const Matrix<T>& x) {
    return ssyt_sum(energy_shape(x.rows(), x.cols()), x);
}

/** Factor j of the product formula: sum_X pi_j^{m-1-j-|X|} Delta_{X+{m}, {j}+X}(Mbar). */
template <class T>
T energy_product_factor(const Matrix<T>& x, int j) {
    const int m = x.rows();
    T pi = mbar_minor(x, {j}, {j});
    T out = Arith<T>::zero();
    IndexSet pool = interval(j + 1, m - 1);
    for (int size = 0; size <= static_cast<int>(pool.size()); ++size)
        for (const auto& X : combinations(pool, size))
            out = out + power(pi, m - 1 - j - size) * mbar_minor(x, set_union(X, {m}), set_union({j}, X));
    return out;
}

/** D(x) as the product of the factors for j = 1, ..., m-1. */
template <class T>
T energy_product(const Matrix<T>& x) {
    T out = Arith<T>::one();
    for (int j = 1; j + 1 <= x.rows(); ++j) out = out * energy_product_factor(x, j);
    return out;
}

namespace detail {

/**
 * Sum over weakly increasing i_1 <= ... <= i_N in [a, b] of
 * x_{i_1}^(r) x_{i_2}^(r-1) ... x_{i_N}^(r-N+1), where value c may repeat at most
 * cap(c) times.
 */
template <class T, class Cap>
T bounded_multiset_sum(const Matrix<T>& x, int N, long r, int a, int b, Cap cap) {
    if (N < 0) return Arith<T>::zero();
    std::vector<T> f(N + 1, Arith<T>::zero());
    f[0] = Arith<T>::one();
    for (int c = a; c <= b; ++c) {
        std::vector<T> g(N + 1, Arith<T>::zero());
        for (int pos = 0; pos <= N; ++pos) {
            if (Arith<T>::is_zero(f[pos])) continue;
            T w = f[pos];
            for (int t = 0; pos + t <= N && t <= cap(c); ++t) {
                if (t > 0) w = w * loop_x(x, c, r - (pos + t) + 1);
                g[pos + t] = g[pos + t] + w;
            }
        }
        f = std::move(g);
    }
    return f[N];
}

}  // namespace detail

/** tau_N^(r)(x_a, ..., x_b): every value repeats at most n-1 times. */
template <class T>
T tau_lp(int N, long r, int a, int b, const Matrix<T>& x) {
    const int cap = x.cols() - 1;
    return detail::bounded_multiset_sum(x, N, r, a, b, [cap](int) { return cap; });
}

/** sigma_N^(r)(x_a, ..., x_b): values other than a repeat at most n-1 times. */
template <class T>
T sigma_lp(int N, long r, int a, int b, const Matrix<T>& x) {
    const int cap = x.cols() - 1;
    return detail::bounded_multiset_sum(x, N, r, a, b, [cap, a, N](int c) { return c == a ? N : cap; });
}

/** sigma_N^(r) regrouped by the number of full runs of a: sum_d pi_a^d tau_{N - nd}^(r). */
template <class T>
T sigma_lp_by_tau(int N, long r, int a, int b, const Matrix<T>& x) {
    const int n = x.cols();
    T pi = Arith<T>::one();
    for (int s = 0; s < n; ++s) pi = pi * loop_x(x, a, r - s);
    T out = Arith<T>::zero();
    for (int d = 0; d * n <= N; ++d) out = out + power(pi, d) * tau_lp(N - d * n, r, a, b, x);
    return out;
}

/** The product of sigma^(n+j-1)_{(n-1)(m-j)}(x_j, ..., x_m) over j = 1, ..., m-1. */
template <class T>
T energy_lp_product(const Matrix<T>& x) {
    const int m = x.rows();
    const int n = x.cols();
    T out = Arith<T>::one();
    for (int j = 1; j + 1 <= m; ++j) out = out * sigma_lp((n - 1) * (m - j), n + j - 1, j, m, x);
    return out;
}

// ---------------------------------------------------------------------------
// Geometric cocharge

/** beta_i = prod_{a <= i} z_{a,i} / prod_{a < i} z_{a,i-1}. */
template <class T>
T beta(const GTPattern<T>& z, int i) {
    if (i < 1 || i > z.n) fail("bad-input", "beta index out of range");
    T num = Arith<T>::one();
    T den = Arith<T>::one();
    for (int a = 1; a <= std::min(i, z.p()); ++a) num = num * z(a, i);
    for (int a = 1; a <= std::min(i - 1, z.p()); ++a) den = den * z(a, i - 1);
    return num / den;
}

/** Delta_{I,J}(Phi(z)): determinant when subtraction exists, Gamma families otherwise. */
template <class T>
T phi_minor(const GTPattern<T>& z, const IndexSet& I, const IndexSet& J) {
    if constexpr (Arith<T>::has_subtraction && Arith<T>::has_division) {
        return minor(phi(z), I, J);
    } else {
        return gamma_minor(z, I, J);
    }
}

/** sigma_k(z) = sum_{X in [2, k-1]} beta_k^{k-2-|X|} Delta_{X+{k}, {1}+X}(Phi(z)). */
template <class T>
T sigma_k(const GTPattern<T>& z, int k) {
    if (k < 2 || k > z.n) fail("bad-input", "sigma_k needs 2 <= k <= height");
    T b = beta(z, k);
    T out = Arith<T>::zero();
    IndexSet pool = interval(2, k - 1);
    for (int size = 0; size <= static_cast<int>(pool.size()); ++size)
        for (const auto& X : combinations(pool, size))
            out = out + power(b, k - 2 - size) * phi_minor(z, set_union(X, {k}), set_union({1}, X));
    return out;
}

/** c_m(z) = sigma_2(z) ... sigma_m(z); c_1 = 1. */
template <class T>
T geometric_cocharge(const GTPattern<T>& z) {
    T out = Arith<T>::one();
    for (int k = 2; k <= z.n; ++k) out = out * sigma_k(z, k);
    return out;
}

// ---------------------------------------------------------------------------
// Kirillov-Berenstein patterns

/** A triangular array p_{i,j}, 1 <= i <= j <= k-1, stored in a (k-1) x (k-1) square. */
struct KBPattern {
    int k = 2;
    std::vector<std::vector<int>> p;

    explicit KBPattern(int k_ = 2) : k(k_), p(std::max(k_ - 1, 0), std::vector<int>(std::max(k_ - 1, 0), 0)) {}
    int& at(int i, int j) { return p[i - 1][j - 1]; }
    int at(int i, int j) const { return p[i - 1][j - 1]; }

    friend bool operator==(const KBPattern& a, const KBPattern& b) { return a.k == b.k && a.p == b.p; }
    friend bool operator<(const KBPattern& a, const KBPattern& b) { return a.p < b.p; }
};

/** GT interlacing, nonnegativity and the three defining conditions of P_{k-1}. */
inline bool kb_valid(const KBPattern& q) {
    const int h = q.k - 1;
    if (h == 0) return true;
    for (int j = 1; j <= h; ++j)
        for (int i = 1; i <= j; ++i) {
            if (q.at(i, j) < 0) return false;
            if (i < j && (q.at(i, j) < q.at(i + 1, j) || q.at(i, j) - 1 > q.at(i + 1, j))) return false;
            if (j < h && (q.at(i, j) > q.at(i, j + 1) || q.at(i, j) < q.at(i + 1, j + 1))) return false;
        }
    for (int i = 1; i <= h - 1; ++i)
        if (q.at(i, h) - 1 > q.at(i, i) || q.at(i, i) > q.at(i + 1, h)) return false;
    return q.at(h, h) == 0;
}

/**
 * The pattern of a vector c with c_i in [0, k-1-i]: diagonal i (entries
 * p_{i,i}, ..., p_{i,k-1} from the top) holds c_i copies of a followed by
 * a + 1, with a the largest value allowed by the diagonal to its right.
 */
inline KBPattern kb_pattern_of_c(int k, const std::vector<int>& c) {
    const int h = k - 1;
    if (static_cast<int>(c.size()) != h) fail("bad-input", "c-vector has the wrong length");
    KBPattern q(k);
    if (h == 0) return q;
    q.at(h, h) = 0;
    for (int i = h - 1; i >= 1; --i) {
        if (c[i - 1] < 0 || c[i - 1] > k - 1 - i) fail("bad-input", "c-vector entry out of range");
        const int cut = i + c[i - 1];
        auto lift = [&](int j) { return j >= cut ? 1 : 0; };
        int a = q.at(i + 1, h) - lift(i);
        for (int j = i + 1; j <= h; ++j) a = std::min(a, q.at(i + 1, j) + 1 - lift(j));
        for (int j = i; j <= h; ++j) q.at(i, j) = a + lift(j);
    }
    if (!kb_valid(q)) fail("bad-input", "c-vector produced an invalid pattern");
    return q;
}

/** P_{k-1} through the (k-1)! c-vectors. */
inline std::vector<KBPattern> kb_patterns(int k) {
    if (k < 2) fail("bad-input", "KB patterns need k >= 2");
    std::vector<KBPattern> out;
    std::vector<int> c(k - 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > k - 1) {
            out.push_back(kb_pattern_of_c(k, c));
            return;
        }
        for (int v = 0; v <= k - 1 - i; ++v) {
            c[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

/**
 * P_{k-1} by scanning interlacing arrays with entries in [0, k-2] row by row
 * from the longest row, rejecting rows whose adjacent entries differ by more
 * than one, and keeping the arrays that pass kb_valid.
 */
inline std::vector<KBPattern> kb_patterns_bruteforce(int k) {
    if (k < 2) fail("bad-input", "KB patterns need k >= 2");
    const int h = k - 1;
    std::vector<KBPattern> out;
    KBPattern q(k);
    if (h == 0) return {q};
    auto fill_row = [&](auto&& self, int j, int i) -> void {
        if (i > j) {
            if (j == 1) {
                if (kb_valid(q)) out.push_back(q);
            } else {
                self(self, j - 1, 1);
            }
            return;
        }
        int lo = 0;
        int hi = k - 2;
        if (j < h) {
            lo = q.at(i + 1, j + 1);
            hi = q.at(i, j + 1);
        }
        if (i > 1) {
            hi = std::min(hi, q.at(i - 1, j));
            lo = std::max(lo, q.at(i - 1, j) - 1);
        }
        for (int v = lo; v <= hi; ++v) {
            q.at(i, j) = v;
            self(self, j, i + 1);
        }
        q.at(i, j) = 0;
    };
    fill_row(fill_row, h, 1);
    std::sort(out.begin(), out.end());
    return out;
}

/** phi_{1,j} = z_{1j} z_{jj} / (z_{1,j+1} z_{j+1,j+1}); phi_{i,j} = z_{i-1,j} z_{ij} / (z_{i-1,j-1} z_{i,j+1}). */
template <class T>
T kb_phi(const GTPattern<T>& z, int i, int j) {
    if (i == 1) return z(1, j) * z(j, j) / (z(1, j + 1) * z(j + 1, j + 1));
    return z(i - 1, j) * z(i, j) / (z(i - 1, j - 1) * z(i, j + 1));
}

/** wt_z(p) = prod phi_{k-j, k-i}(z)^{p_{i,j}}. */
template <class T>
T kb_weight(const KBPattern& q, const GTPattern<T>& z) {
    T w = Arith<T>::one();
    for (int j = 1; j <= q.k - 1; ++j)
        for (int i = 1; i <= j; ++i)
            if (q.at(i, j) > 0) w = w * power(kb_phi(z, q.k - j, q.k - i), q.at(i, j));
    return w;
}

/** beta_k^{k-2} z_{k,k} sum_{p in P_{k-1}} wt_z(p). */
template <class T>
T kb_sigma(const GTPattern<T>& z, int k) {
    T s = Arith<T>::zero();
    for (const auto& q : kb_patterns(k)) s = s + kb_weight(q, z);
    return power(beta(z, k), k - 2) * z(k, k) * s;
}

}  // namespace lsym
