/**
 * @file test_paths_lgv.cpp
 * @brief Layered planar networks: brute-force path enumeration as the oracle
 *        for Lindstrom-Gessel-Viennot sums in both value domains, the highway
 *        and underway networks, and the unfolded sum of minors.
 */
#include <gtest/gtest.h>

#include "lsym/network.hpp"
#include "lsym/rng.hpp"
#include "lsym/unfolded.hpp"

namespace lsym {
namespace {

template <class T>
std::vector<Layer<T>> random_layers(int N, int K, const std::function<T()>& draw) {
    std::vector<Layer<T>> layers;
    for (int c = 0; c < K; ++c) {
        Layer<T> L(1, N);
        for (int p = 0; p < N; ++p) {
            L.diag[p] = draw();
            L.step[p] = draw();
        }
        layers.push_back(L);
    }
    return layers;
}

/** All paths from position i down to j through the layers, as position sequences. */
template <class T>
std::vector<std::vector<int>> paths(const std::vector<Layer<T>>& layers, int i, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur = {i};
    std::function<void()> go = [&] {
        const std::size_t c = cur.size() - 1;
        if (c == layers.size()) {
            if (cur.back() == j) out.push_back(cur);
            return;
        }
        const int p = cur.back();
        cur.push_back(p);
        go();
        cur.back() = p - 1;
        if (p - 1 >= layers[c].lo && layers[c].can_step[p - layers[c].lo]) go();
        cur.pop_back();
    };
    go();
    return out;
}

template <class T>
T path_weight(const std::vector<Layer<T>>& layers, const std::vector<int>& path) {
    T w = Arith<T>::one();
    for (std::size_t c = 0; c < layers.size(); ++c) {
        const auto& L = layers[c];
        const int p = path[c];
        w = w * (path[c + 1] == p ? L.diag[p - L.lo] : L.step[p - L.lo]);
    }
    return w;
}

/** Sum over vertex-disjoint families with sources I matched in order to sinks J. */
template <class T>
T brute_force_families(const std::vector<Layer<T>>& layers, const IndexSet& I, const IndexSet& J) {
    std::vector<std::vector<std::vector<int>>> options;
    for (std::size_t t = 0; t < I.size(); ++t) options.push_back(paths(layers, I[t], J[t]));
    T total = Arith<T>::zero();
    std::vector<const std::vector<int>*> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t t) {
        if (t == I.size()) {
            T w = Arith<T>::one();
            for (const auto* p : chosen) w = w * path_weight(layers, *p);
            total = total + w;
            return;
        }
        for (const auto& p : options[t]) {
            bool disjoint = true;
            for (const auto* q : chosen)
                for (std::size_t c = 0; c < p.size() && disjoint; ++c) disjoint = p[c] != (*q)[c];
            if (!disjoint) continue;
            chosen.push_back(&p);
            go(t + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return total;
}

TEST(LGV, RationalFamiliesGiveMinorsOfTheProduct) {
    TrialRng rng(79, 1);
    for (int t = 0; t < 10; ++t) {
        auto layers = random_layers<Rational>(4, 3, [&] { return rng.positive_rational(); });
        auto A = chain_matrix(layers, 4);
        for (int k = 1; k <= 3; ++k)
            for (const auto& I : combinations(interval(1, 4), k))
                for (const auto& J : combinations(interval(1, 4), k)) {
                    Rational brute = brute_force_families(layers, I, J);
                    EXPECT_EQ(chain_minor(layers, I, J), brute);
                    EXPECT_EQ(minor(A, I, J), brute);
                }
    }
}

TEST(LGV, MinPlusFamiliesAreMinimalWeights) {
    TrialRng rng(83, 2);
    for (int t = 0; t < 10; ++t) {
        auto layers = random_layers<Trop>(4, 3, [&] { return Trop(rng.uniform(-5, 5)); });
        for (int k = 1; k <= 3; ++k)
            for (const auto& I : combinations(interval(1, 4), k))
                for (const auto& J : combinations(interval(1, 4), k))
                    EXPECT_EQ(chain_minor(layers, I, J), brute_force_families(layers, I, J));
    }
}

TEST(Highway, SingleSourceExample) {
    auto x = symbolic_point(5, 3);
    Poly h = highway_minor(x, {5}, {2});
    EXPECT_EQ(h, loop_E(x, 2, 2));
    EXPECT_EQ(h.size(), 10u);
}

TEST(Highway, FamiliesGiveMinorsOfMtilde) {
    TrialRng rng(89, 3);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto x = rng.positive_matrix(m, n);
            auto Mt = build_Mtilde(x);
            for (int k = 1; k <= 2; ++k)
                for (const auto& I : combinations(interval(1, 5), k))
                    for (const auto& J : combinations(interval(1, 5), k))
                        EXPECT_EQ(highway_minor(x, I, J), periodic_minor(Mt, I, J)) << m << "x" << n;
        }
}

TEST(Underway, FamiliesGiveMinorsOfMbar) {
    TrialRng rng(97, 4);
    auto x = rng.positive_matrix(4, 3);
    auto Mb = build_Mbar(x);
    for (int k = 1; k <= 4; ++k)
        for (const auto& A : combinations(interval(1, 4), k))
            for (const auto& B : combinations(interval(1, 4), k)) EXPECT_EQ(underway_minor(x, A, B), minor(Mb, A, B));
}

TEST(Complement, UnderwayComplementRecoversTheHighwayFamily) {
    int families = 0;
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 2; ++k)
            for (const auto& I : combinations(interval(1, 4), k))
                for (const auto& J : combinations(interval(-2, 4), k))
                    for (const auto& F : enumerate_highway_families(m, I, J)) {
                        StripWindow win{m, -2, 4};
                        auto U = complement(F, win);
                        EXPECT_EQ(complement_back(U, win).rows, F.rows);
                        ++families;
                    }
    EXPECT_GT(families, 20);
}

TEST(UnfoldedSumOfMinors, BottomLeftMinorsAreShapeInvariants) {
    TrialRng rng(101, 5);
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            auto x = rng.positive_matrix(m, n);
            for (int a = std::max(1, n - m); a <= n; ++a) {
                Rational l = periodic_minor(build_Mtilde(x), interval(n + 1 - a, n), interval(1, a));
                EXPECT_EQ(l, minor(build_Mbar(x), interval(n + 1 - a, m), interval(1, m - n + a)));
                EXPECT_EQ(l, shape_invariant(x, n + 1 - a));
            }
        }
}

TEST(UnfoldedSumOfMinors, HoldsOnAdmissibleParameters) {
    TrialRng rng(103, 6);
    int checked = 0;
    for (int d = 0; d <= 1; ++d) {
        auto x = rng.positive_matrix(3, 3);
        for (const auto& p : band_corpus(3, 3, d)) {
            if (!band_params_admissible(p, 3, 3)) continue;
            EXPECT_EQ(unfolded_lhs(x, p), unfolded_sum_of_minors(x, p)) << p.str();
            ++checked;
        }
    }
    EXPECT_GT(checked, 10);
}

TEST(UnfoldedSumOfMinors, FailsOutsideTheAdmissibleRange) {
    // The fixed intervals overlap here, so no X_1 exists and the sum is empty.
    BandParams p{{1, 0, 1}, {1, 0, 1}};
    EXPECT_FALSE(band_params_admissible(p, 2, 2));
    auto X = symbolic_point(2, 2);
    auto s = band_index_sets(p, 2);
    Poly lhs = periodic_minor(build_Mtilde(X, 4), s.I, s.J);
    EXPECT_EQ(lhs, loop_E(X, 1, 2) * loop_E(X, 1, 2));
    EXPECT_TRUE(unfolded_sum_of_minors(X, p).is_zero());
}

}  // namespace
}  // namespace lsym
