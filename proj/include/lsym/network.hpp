/**
 * @file network.hpp
 * @brief Lindstrom-Gessel-Viennot sums over layered planar networks.
 *
 * Every network used in the library is a product A = L_1 L_2 ... L_K of
 * lower bidiagonal layers. A path enters layer L_c at position p and either
 * stays at p (weight L_c(p, p)) or moves to p - 1 (weight L_c(p, p-1)).
 * Families of paths with distinct positions at every layer boundary are the
 * non-intersecting families, and by Cauchy-Binet their total weight is the
 * minor Delta_{I,J}(A). The sums use only + and *, so the same code evaluates
 * minors exactly, symbolically, or in the min-plus semiring.
 *
 * Instances:
 *   highway network  W~(x_1) ... W~(x_m), giving the periodic matrix M~ and
 *                    (restricted to the first k layers) M(x_1, ..., x_k)
 *   underway network W(x^1) ... W(x^n), giving Mbar = M(x^1, ..., x^n)
 *   Gamma network    W^p(...) ... W^1(...), giving Phi(z) for a GT pattern
 *   cylindric network  the highway network with rows read modulo n; a step
 *                    from row 1 to row n crosses the chord and adds one to
 *                    the winding number
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "lsym/matrix.hpp"
#include "lsym/periodic.hpp"

namespace lsym {

/** One lower bidiagonal layer on the positions [lo, hi]. */
template <class T>
struct Layer {
    int lo = 1;
    int hi = 0;
    std::vector<T> diag;      // diag[p - lo] = L(p, p)
    std::vector<T> step;      // step[p - lo] = L(p, p - 1)
    std::vector<char> can_step;

    Layer(int lo_, int hi_) : lo(lo_), hi(hi_), diag(hi_ - lo_ + 1, Arith<T>::zero()),
        step(hi_ - lo_ + 1, Arith<T>::one()), can_step(hi_ - lo_ + 1, 1) {
        can_step[0] = 0;
    }
};

/** Total weight of non-intersecting families from sources I to sinks J. */
template <class T>
T chain_minor(const std::vector<Layer<T>>& layers, IndexSet I, IndexSet J) {
    if (I.size() != J.size()) fail("minor-shape", "|I| != |J|");
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    const std::size_t k = I.size();
    if (k == 0) return Arith<T>::one();
    const int K = static_cast<int>(layers.size());
    for (std::size_t a = 0; a < k; ++a)
        if (I[a] < J[a] || I[a] - J[a] > K) return Arith<T>::zero();

    std::map<std::vector<int>, T> cur;
    cur.emplace(I, Arith<T>::one());
    for (int c = 0; c < K; ++c) {
        const Layer<T>& L = layers[c];
        const int remaining = K - c - 1;
        std::map<std::vector<int>, T> next;
        for (const auto& [pos, w] : cur) {
            for (std::uint32_t mv = 0; mv < (1u << k); ++mv) {
                std::vector<int> np(pos);
                T weight = w;
                bool ok = true;
                for (std::size_t a = 0; a < k && ok; ++a) {
                    int p = pos[a];
                    if (p < L.lo || p > L.hi) { ok = false; break; }
                    if (mv & (1u << a)) {
                        if (!L.can_step[p - L.lo]) { ok = false; break; }
                        weight = weight * L.step[p - L.lo];
                        np[a] = p - 1;
                    } else {
                        const T& d = L.diag[p - L.lo];
                        if (Arith<T>::is_zero(d)) { ok = false; break; }
                        weight = weight * d;
                    }
                    if (np[a] < J[a] || np[a] - J[a] > remaining) ok = false;
                    if (a > 0 && np[a] <= np[a - 1]) ok = false;
                }
                if (!ok) continue;
                auto it = next.find(np);
                if (it == next.end()) next.emplace(std::move(np), weight);
                else it->second = it->second + weight;
            }
        }
        cur.swap(next);
        if (cur.empty()) return Arith<T>::zero();
    }
    auto it = cur.find(J);
    return it == cur.end() ? Arith<T>::zero() : it->second;
}

/** A_{ij} of the layered network: the k = 1 case of chain_minor. */
template <class T>
Matrix<T> chain_matrix(const std::vector<Layer<T>>& layers, int size) {
    Matrix<T> A(size, size);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) A(i, j) = chain_minor(layers, {i}, {j});
    return A;
}

/**
 * Layers W~(x_1), ..., W~(x_k) of the highway network restricted to rows
 * [lo, hi]. Layer c at row p carries x_c^{(p + c - 1)} = x_c^{p mod n}.
 */
template <class T>
std::vector<Layer<T>> highway_layers(const Matrix<T>& x, int lo, int hi, int k) {
    const int n = x.cols();
    std::vector<Layer<T>> layers;
    for (int c = 1; c <= k; ++c) {
        Layer<T> L(lo, hi);
        for (int p = lo; p <= hi; ++p) L.diag[p - lo] = x(c, mod1(p, n));
        layers.push_back(std::move(L));
    }
    return layers;
}

/** Delta_{I,J}(M~) for arbitrary integer index sets, by highway families. */
template <class T>
T highway_minor(const Matrix<T>& x, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) fail("minor-shape", "|I| != |J|");
    if (I.empty()) return Arith<T>::one();
    int lo = *std::min_element(J.begin(), J.end());
    int hi = *std::max_element(I.begin(), I.end());
    if (hi < lo) return Arith<T>::zero();
    return chain_minor(highway_layers(x, lo, hi, x.rows()), I, J);
}

/** Delta_{I,J}(M(x_1, ..., x_k)) for I, J inside [n], by highway families. */
template <class T>
T row_product_minor(const Matrix<T>& x, int k, const IndexSet& I, const IndexSet& J) {
    return chain_minor(highway_layers(x, 1, x.cols(), k), I, J);
}

/** Layers W(x^1), ..., W(x^k) of the underway network (positions [1, m]). */
template <class T>
std::vector<Layer<T>> underway_layers(const Matrix<T>& x, int k) {
    const int m = x.rows();
    std::vector<Layer<T>> layers;
    for (int j = 1; j <= k; ++j) {
        Layer<T> L(1, m);
        for (int p = 1; p <= m; ++p) L.diag[p - 1] = x(p, j);
        layers.push_back(std::move(L));
    }
    return layers;
}

/** Delta_{A,B}(Mbar) by underway families. */
template <class T>
T underway_minor(const Matrix<T>& x, const IndexSet& A, const IndexSet& B) {
    return chain_minor(underway_layers(x, x.cols()), A, B);
}

/** Delta_{A,B}(M(x^1, ..., x^k)) (m x m) by underway families. */
template <class T>
T column_product_minor(const Matrix<T>& x, int k, const IndexSet& A, const IndexSet& B) {
    return chain_minor(underway_layers(x, k), A, B);
}

/**
 * Sum over non-intersecting families on the cylinder from I to J (both in
 * [n]) grouped by total winding number: entry d of the result is the sum
 * over families of winding d, for d = 0 .. max_d.
 */
template <class T>
std::vector<T> cyl_family_sums(const Matrix<T>& x, IndexSet I, IndexSet J, int max_d) {
    if (I.size() != J.size()) fail("minor-shape", "|I| != |J|");
    const int n = x.cols();
    const int m = x.rows();
    const std::size_t k = I.size();
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    std::vector<T> out(max_d + 1, Arith<T>::zero());
    if (k == 0) {
        out[0] = Arith<T>::one();
        return out;
    }
    using State = std::pair<std::vector<int>, int>;
    std::map<State, T> cur;
    cur.emplace(State{I, 0}, Arith<T>::one());
    for (int c = 1; c <= m; ++c) {
        std::map<State, T> next;
        for (const auto& [st, w] : cur) {
            const auto& pos = st.first;
            for (std::uint32_t mv = 0; mv < (1u << k); ++mv) {
                std::vector<int> np(pos);
                int wind = st.second;
                T weight = w;
                for (std::size_t a = 0; a < k; ++a) {
                    if (mv & (1u << a)) {
                        if (pos[a] == 1) {
                            np[a] = n;
                            ++wind;
                        } else {
                            np[a] = pos[a] - 1;
                        }
                    } else {
                        weight = weight * x(c, pos[a]);
                    }
                }
                if (wind > max_d) continue;
                std::sort(np.begin(), np.end());
                if (std::adjacent_find(np.begin(), np.end()) != np.end()) continue;
                State ns{std::move(np), wind};
                auto it = next.find(ns);
                if (it == next.end()) next.emplace(std::move(ns), weight);
                else it->second = it->second + weight;
            }
        }
        cur.swap(next);
    }
    for (const auto& [st, w] : cur)
        if (st.first == J) out[st.second] = out[st.second] + w;
    return out;
}

template <class T>
T cyl_family_sum(const Matrix<T>& x, const IndexSet& I, const IndexSet& J, int d) {
    return cyl_family_sums(x, I, J, d)[d];
}

// ---------------------------------------------------------------------------
// Explicit highway families and their underway complements.
//
// A highway family is stored by its row trajectories: path a is the list of
// rows rho_0, ..., rho_m, where rho_{c-1} is the row on which the path enters
// column c and rho_c is the row on which it leaves (rho_c in {rho_{c-1},
// rho_{c-1} - 1}). Edges are represented in the vertex grid Z x [0, m+1]:
// a horizontal edge (rho, c) -> (rho, c+1) and a vertical edge
// (rho, c) -> (rho - 1, c).

struct Edge {
    int row;
    int col;
    bool vertical;
    auto key() const { return std::tuple(row, col, vertical); }
    friend bool operator<(const Edge& a, const Edge& b) { return a.key() < b.key(); }
    friend bool operator==(const Edge& a, const Edge& b) { return a.key() == b.key(); }
};

struct HighwayFamily {
    std::vector<std::vector<int>> rows;  // rows[a][c] for c = 0..m
};

/** An underway path as the sequence of grid vertices it visits. */
struct UnderwayPath {
    std::vector<std::pair<int, int>> vertices;
};

struct StripWindow {
    int m = 0;
    int lo = 0;  // top row
    int hi = 0;  // bottom row
};

/** All non-intersecting highway families from I to J inside the window. */
std::vector<HighwayFamily> enumerate_highway_families(int m, IndexSet I, IndexSet J);

/** Edge set of a highway family (edges strictly inside the window grid). */
std::vector<Edge> highway_edges(const HighwayFamily& F);

/** The edges of the window that the family does not use, split into underway paths. */
std::vector<UnderwayPath> complement(const HighwayFamily& F, const StripWindow& win);

/** Reconstructs the highway family whose edge set complements the underway paths. */
HighwayFamily complement_back(const std::vector<UnderwayPath>& U, const StripWindow& win);

template <class T>
T highway_family_weight(const HighwayFamily& F, const Matrix<T>& x) {
    const int n = x.cols();
    T w = Arith<T>::one();
    for (const auto& path : F.rows)
        for (std::size_t c = 1; c < path.size(); ++c)
            if (path[c] == path[c - 1]) w = w * x(static_cast<int>(c), mod1(path[c], n));
    return w;
}

/** Weight of underway paths: vertices passed straight through vertically. */
template <class T>
T underway_weight(const std::vector<UnderwayPath>& U, const Matrix<T>& x) {
    const int n = x.cols();
    T w = Arith<T>::one();
    for (const auto& p : U)
        for (std::size_t s = 1; s + 1 < p.vertices.size(); ++s) {
            auto [r0, c0] = p.vertices[s - 1];
            auto [r1, c1] = p.vertices[s];
            auto [r2, c2] = p.vertices[s + 1];
            (void)r1;
            if (c0 == c1 && c1 == c2 && r0 == r1 + 1 && r1 == r2 + 1 && c1 >= 1 && c1 <= x.rows())
                w = w * x(c1, mod1(r1, n));
        }
    return w;
}

}  // namespace lsym
