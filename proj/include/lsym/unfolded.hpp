/**
 * @file unfolded.hpp
 * @brief Minors of M~ on band-structured index sets as sums of products of
 *        minors of Mbar (the complementary underway families).
 *
 * The index sets are I = union_k [(k+1)n + 1 - a_k, (k+1)n] and
 * J = union_k [kn + 1, kn + b_k] for k = 0, ..., d.
 */
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "lsym/loop_schur.hpp"

namespace lsym {

struct BandParams {
    std::vector<int> a;
    std::vector<int> b;

    int d() const { return static_cast<int>(a.size()) - 1; }

    std::string str() const {
        std::string s = "a=(";
        for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
        s += ") b=(";
        for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
        return s + ")";
    }
};

/** Checks equal sums, a_k, b_k in [max(0, n - m), n] and equal lengths. */
inline void check_band_params(const BandParams& p, int m, int n) {
    if (p.a.empty() || p.a.size() != p.b.size()) fail("bad-input", "band parameters need d + 1 values each");
    int sa = 0, sb = 0;
    for (std::size_t k = 0; k < p.a.size(); ++k) {
        for (int v : {p.a[k], p.b[k]})
            if (v < std::max(0, n - m) || v > n) fail("bad-input", "band parameter outside [max(0, n-m), n]: " + p.str());
        sa += p.a[k];
        sb += p.b[k];
    }
    if (sa != sb) fail("bad-input", "band parameters have different sums: " + p.str());
}

inline MayaSets band_index_sets(const BandParams& p, int n) {
    MayaSets s;
    for (int k = 0; k <= p.d(); ++k) {
        for (int v = (k + 1) * n + 1 - p.a[k]; v <= (k + 1) * n; ++v) s.I.push_back(v);
        for (int v = k * n + 1; v <= k * n + p.b[k]; ++v) s.J.push_back(v);
    }
    return s;
}

/**
 * Sum over X_1, ..., X_d with X_k inside [n - a_k + 1, m - (n - b_{k-1})] of
 * prod_{k=0}^{d} Delta_{X_k u [m - (n - b_{k-1}) + 1, m], [1, n - a_{k+1}] u X_{k+1}}(Mbar),
 * where a_{d+1} = b_{-1} = n, X_0 = [n - a_0 + 1, m], X_{d+1} = [1, m - (n - b_d)].
 */
template <class T>
T unfolded_sum_of_minors(const Matrix<T>& x, const BandParams& p) {
    const int m = x.rows();
    const int n = x.cols();
    check_band_params(p, m, n);
    const int d = p.d();
    auto a = [&](int k) { return k == d + 1 ? n : p.a[k]; };
    auto b = [&](int k) { return k == -1 ? n : p.b[k]; };
    std::vector<IndexSet> X(d + 2);
    X[0] = interval(n - a(0) + 1, m);
    X[d + 1] = interval(1, m - (n - b(d)));
    T total = Arith<T>::zero();
    // Choose X_1, ..., X_d in turn; |X_{k+1}| = |X_k| + (n - b_{k-1}) - (n - a_{k+1}).
    auto rec = [&](auto&& self, int k, const T& acc) -> void {
        const int size = static_cast<int>(X[k].size()) + (n - b(k - 1)) - (n - a(k + 1));
        IndexSet rows = set_union(X[k], interval(m - (n - b(k - 1)) + 1, m));
        auto term = [&](const IndexSet& next) {
            IndexSet cols = set_union(interval(1, n - a(k + 1)), next);
            if (rows.size() != cols.size()) return Arith<T>::zero();
            return T(acc * mbar_minor(x, rows, cols));
        };
        if (k == d) {
            if (size != static_cast<int>(X[d + 1].size())) return;
            total = total + term(X[d + 1]);
            return;
        }
        if (size < 0) return;
        for (const auto& S : combinations(interval(n - a(k + 1) + 1, m - (n - b(k))), size)) {
            X[k + 1] = S;
            T next = term(S);
            if (!Arith<T>::is_zero(next)) self(self, k + 1, next);
        }
    };
    rec(rec, 0, Arith<T>::one());
    return total;
}

/** Delta_{I,J}(M~) on the band index sets, by determinant. */
inline Rational unfolded_lhs(const Matrix<Rational>& x, const BandParams& p) {
    auto s = band_index_sets(p, x.cols());
    return periodic_minor(build_Mtilde(x, std::max(default_depth(x.rows(), x.cols()), p.d() + 2)), s.I, s.J);
}

/**
 * The identity needs two conditions beyond check_band_params:
 *   (n - a_k) + (n - b_{k-1}) <= m for k = 1, ..., d, so the fixed row
 *   interval [m - (n - b_{k-1}) + 1, m] and the fixed column interval
 *   [1, n - a_k] of the k-th factor leave room for X_k between them;
 *   with I and J sorted, J_t <= I_t <= J_t + m - 1, so every entry on the
 *   diagonal of the window lies in the band of M~.
 * Outside this range the two sides can differ: for m = n = 2 and
 * a = b = (1, 0, 1) the minor is (E_1^(2))^2 while the sum is empty.
 */
inline bool band_params_admissible(const BandParams& p, int m, int n) {
    for (int k = 1; k <= p.d(); ++k)
        if ((n - p.a[k]) + (n - p.b[k - 1]) > m) return false;
    auto s = band_index_sets(p, n);
    std::sort(s.I.begin(), s.I.end());
    std::sort(s.J.begin(), s.J.end());
    for (std::size_t t = 0; t < s.I.size(); ++t)
        if (s.I[t] < s.J[t] || s.I[t] > s.J[t] + m - 1) return false;
    return true;
}

/** Every parameter tuple with the given d passing check_band_params with a positive sum. */
inline std::vector<BandParams> band_corpus(int m, int n, int d) {
    std::vector<BandParams> out;
    const int lo = std::max(0, n - m);
    std::vector<int> a(d + 1), b(d + 1);
    auto fill = [&](auto&& self, std::vector<int>& v, int k, auto&& done) -> void {
        if (k > d) {
            done();
            return;
        }
        for (int t = lo; t <= n; ++t) {
            v[k] = t;
            self(self, v, k + 1, done);
        }
    };
    fill(fill, a, 0, [&] {
        fill(fill, b, 0, [&] {
            int sa = 0, sb = 0;
            for (int k = 0; k <= d; ++k) sa += a[k], sb += b[k];
            if (sa == sb && sa > 0) out.push_back({a, b});
        });
    });
    return out;
}

}  // namespace lsym
