/**
 * @file paper_examples.cpp
 * @brief Regression suite replaying the published worked examples: explicit
 *        matrices, polynomials, index sets and Laurent expressions.
 */
#include "lsym/comb.hpp"
#include "lsym/cylindric.hpp"
#include "lsym/energy.hpp"
#include "lsym/unfolded.hpp"
#include "verify_internal.hpp"

namespace lsym::detail {

namespace {

using Q = Rational;

/** Colored loop variable x_i^(r) as a polynomial, for period n. */
Poly cx(int i, int r, int n) { return Poly::loop(i, mod1(static_cast<long>(r) - i + 1, n)); }

IndexSet shifted(IndexSet s, int by) {
    for (int& v : s) v += by;
    return s;
}

template <class T>
Matrix<T> from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix<T> A(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 1; i <= A.rows(); ++i)
        for (int j = 1; j <= A.cols(); ++j) A(i, j) = rows[i - 1][j - 1];
    return A;
}

void add(SuitePlan& plan, int m, int n, std::function<void(TaskContext&, TrialRng&)> f) {
    plan.tasks.push_back({m, n, std::move(f)});
}

void gt_and_grsk_examples(SuitePlan& plan) {
    // Phi of a pattern in GT_4^{<=2}.
    add(plan, 2, 4, [](TaskContext& ctx, TrialRng& rng) {
        GTPattern<Q> z(2, 4);
        for (auto& [k, v] : z.z) v = rng.positive_rational();
        ctx.witness["z"] = to_json(z);
        auto Z = [&](int i, int j) { return z(i, j); };
        Matrix<Q> want = from_rows<Q>({{Z(1, 1), 0, 0, 0},
                                       {Z(2, 2), Z(1, 2) * Z(2, 2) / Z(1, 1), 0, 0},
                                       {1, Z(1, 2) / Z(1, 1) + Z(2, 3) / Z(2, 2), Z(1, 3) * Z(2, 3) / (Z(1, 2) * Z(2, 2)), 0},
                                       {0, 1, Z(1, 3) / Z(1, 2) + Z(2, 4) / Z(2, 3), Z(1, 4) * Z(2, 4) / (Z(1, 3) * Z(2, 3))}});
        ctx.check(phi(z) == want, "Phi(z) for z in GT_4^{<=2}");
    });
    // gRSK insertion formulas for m = 3, n = 2.
    add(plan, 3, 2, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(3, 2);
        ctx.witness["x"] = to_json(x);
        auto X = [&](int i, int j) { return x(i, j); };
        Q a = X(1, 2) + X(2, 1);
        Q b = X(1, 2) * X(2, 2) + X(1, 2) * X(3, 1) + X(2, 1) * X(3, 1);
        Matrix<Q> want = from_rows<Q>({{a, X(1, 1) * X(1, 2)},
                                       {b, X(1, 1) * X(2, 1) * X(1, 2) * X(2, 2) / a},
                                       {X(1, 1) * X(2, 1) * X(3, 1), X(1, 1) * X(2, 1) * X(3, 1) * X(1, 2) * X(2, 2) * X(3, 2) / b}});
        ctx.check(glue(grsk(x)) == want, "glued gRSK of a 3 x 2 matrix");
        Matrix<Q> ones(3, 2, Q(1));
        ctx.check(glue(grsk(ones)) == from_rows<Q>({{2, 1}, {3, Q(1, 2)}, {1, Q(1, 3)}}), "glued gRSK of the all-ones 3 x 2 matrix");
    });
    // GT pattern <-> tableau.
    add(plan, 4, 4, [](TaskContext& ctx, TrialRng&) {
        Tableau T = {{1, 1, 1, 2, 2, 2, 4, 4}, {2, 3, 3, 3, 4}, {3, 4, 4}};
        GTPattern<long> g(4, 4);
        const std::vector<std::vector<long>> rows = {{3}, {6, 1}, {6, 4, 1}, {8, 5, 3, 0}};
        for (int j = 1; j <= 4; ++j)
            for (int i = 1; i <= j; ++i) g(i, j) = rows[j - 1][i - 1];
        ctx.check(gt_of_tableau(T, 4, 4) == g, "GT pattern of 11122244/23334/344");
        ctx.check(tableau_of_gt(g) == T, "tableau of the GT pattern 3 / 6 1 / 6 4 1 / 8 5 3 0");
    });
    // RSK and its min-plus lift.
    add(plan, 3, 2, [](TaskContext& ctx, TrialRng&) {
        IntMatrix a = from_rows<long>({{1, 4}, {2, 1}, {1, 0}});
        auto pq = rsk(a);
        ctx.check(tableau_str(pq.P) == "111122/222", "RSK insertion tableau", tableau_str(pq.P));
        ctx.check(tableau_str(pq.Q) == "111112/223", "RSK recording tableau", tableau_str(pq.Q));
        auto tg = trop_grsk(a);
        ctx.check(glue(PQPair<long>{tg.first, tg.second}) == from_rows<long>({{2, 5}, {3, 6}, {4, 6}}), "glued min-plus gRSK");
    });
    // n = 1: the R-matrix swaps the two scalars.
    add(plan, 2, 1, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(2, 1);
        ctx.witness["x"] = to_json(x);
        ctx.check(row_R(x, 1) == from_rows<Q>({{x(2, 1)}, {x(1, 1)}}), "R on X_1 x X_1 swaps the factors");
    });
}

void loop_schur_examples(SuitePlan& plan) {
    // s^(1)_{(4,2)} for m = 2, n = 4.
    add(plan, 2, 4, [](TaskContext& ctx, TrialRng&) {
        const int n = 4;
        auto x = symbolic_point(2, n);
        auto c = [&](int i, int r) { return cx(i, r, n); };
        Poly want = c(1, 1) * c(1, 2) * c(1, 3) * c(1, 4) * c(2, 1) * c(2, 2) +
                    c(1, 1) * c(1, 3) * c(1, 4) * c(2, 1) * c(2, 2) * c(2, 2) +
                    c(1, 1) * c(1, 4) * c(2, 1) * c(2, 2) * c(2, 2) * c(2, 3);
        ColoredSkewShape s(Partition{4, 2}, Partition{}, 1, n);
        Poly v = ssyt_sum(s, x);
        ctx.check(v == want, "s^(1)_{(4,2)} has the three listed monomials", v.str());
        auto E = [&](int k, int r) { return loop_E(x, k, r); };
        Poly z;
        Poly one(1);
        Matrix<Poly> A = from_rows<Poly>({{E(2, 1), z, z, z}, {E(1, 1), E(2, 4), z, z}, {z, one, E(1, 3), E(2, 2)}, {z, z, one, E(1, 2)}});
        ctx.check(det(A) == want, "the 4 x 4 Jacobi-Trudi determinant");
        auto ms = maya_sets(s, 2);
        ctx.check(periodic_minor(build_Mtilde(x), ms.I, ms.J) == want, "minor of M~ on the Maya sets");
    });
    // E_2^(2) and Hbar_2^(3) for m = 3, n = 2; entries of the unfolded M~.
    add(plan, 3, 2, [](TaskContext& ctx, TrialRng&) {
        auto x = symbolic_point(3, 2);
        Poly want = Poly::loop(1, 2) * Poly::loop(2, 2) + Poly::loop(1, 2) * Poly::loop(3, 1) + Poly::loop(2, 1) * Poly::loop(3, 1);
        ctx.check(loop_E(x, 2, 2) == want, "E_2^(2) for m = 3, n = 2");
        ctx.check(barred_H(x, 2, 3) == want, "Hbar_2^(3) = E_2^(2)");
        auto Mt = build_Mtilde(x);
        ctx.check(Mt.at(1, 1) == loop_E(x, 3, 1) && Mt.at(2, 1) == loop_E(x, 2, 2) && Mt.at(3, 1) == loop_E(x, 1, 1) &&
                      Mt.at(4, 1) == Poly(1) && Mt.at(4, 2) == loop_E(x, 1, 2),
                  "displayed entries of M~");
        bool general = true;
        for (int i = -3; i <= 8; ++i)
            for (int j = -3; j <= 8; ++j) general = general && Mt.at(i, j) == loop_E(x, 3 + j - i, mod1(i, 2));
        ctx.check(general, "M~_{ij} = E^(i)_{m+j-i}");
    });
    // The highway network Net_{5,3}: one path from source 5 to sink 2.
    add(plan, 5, 3, [](TaskContext& ctx, TrialRng&) {
        auto x = symbolic_point(5, 3);
        Poly h = highway_minor(x, {5}, {2});
        ctx.check(h == loop_E(x, 2, 2) && h.size() == 10, "paths 5 -> 2' give E_2^(2) with 10 monomials");
    });
    // Maya sets with the raw color r = 6 (period 4), and the Q-invariant shape data.
    add(plan, 5, 4, [](TaskContext& ctx, TrialRng& rng) {
        ColoredSkewShape s(Partition{4, 4, 4, 1}, Partition{2, 2}, 6, 4);
        auto ms = maya_sets(s, 5);
        ctx.check(shifted(ms.I, 4) == IndexSet{3, 4, 7, 8} && shifted(ms.J, 4) == IndexSet{1, 2, 3, 5},
                  "I = {3,4,7,8}, J = {1,2,3,5} for r = 6");
        auto x = rng.positive_matrix(5, 4);
        ctx.witness["x"] = to_json(x);
        ctx.check(periodic_minor(build_Mtilde(x), {3, 4, 7, 8}, {1, 2, 3, 5}) == ssyt_sum(s, x), "the Maya minor is the loop Schur function");
        auto q = q_shape(1, 3, 5, 4);
        ctx.check(q.K == 2 && q.shape.lambda == Partition{4, 4, 4, 1} && q.shape.mu == Partition{2, 2} && q.shape.r == 2,
                  "Q_1^(3) for m = 5, n = 4 has K = 2 and shape (4,4,4,1)/(2,2) of color 2");
        bool nw = true, se = true;
        for (auto [i, j] : q.shape.nw_corners()) nw = nw && q.shape.color(i, j) == 4;
        for (auto [i, j] : q.shape.se_corners()) se = se && q.shape.color(i, j) == 1;
        ctx.check(nw && se, "NW corners have color 4 and SE corners color 1");
        ctx.check(rho_shape(4, 5, 4).lambda == Partition{1, 1} && rho_shape(3, 5, 4).lambda == Partition{2, 2, 2} &&
                      rho_shape(4, 5, 4).r == 4 && rho_shape(3, 5, 4).r == 4,
                  "flanking rectangles S_4 = (1,1) and S_3 = (2,2,2), color 4");
        ctx.check(q_invariant(x, 1, 3) == q_invariant_minor(x, 1, 3), "Q_1^(3) tableau sum = minor");
    });
    // m = n = 2: E_1^(1) in terms of Q_1^(1).
    add(plan, 2, 2, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(2, 2);
        ctx.witness["x"] = to_json(x);
        Q e12 = loop_E(x, 1, 2);
        ctx.check(loop_E(x, 1, 1) == (q_invariant(x, 1, 1) + e12 * (loop_E(x, 2, 1) + loop_E(x, 2, 2))) / (e12 * e12),
                  "E_1^(1) = (Q_1^(1) + E_1^(2)(E_2^(1) + E_2^(2))) / (E_1^(2))^2");
        ctx.check(shape_invariant(x, 2) == e12, "S_2 = E_1^(2)");
    });
}

void det_examples(SuitePlan& plan) {
    // m = 5, n = 3, (4,3,3,1)/(2) with r = 2.
    add(plan, 5, 3, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(5, 3);
        ctx.witness["x"] = to_json(x);
        ColoredSkewShape s(Partition{4, 3, 3, 1}, Partition{2}, 2, 3);
        auto ms = maya_sets(s, 5);
        ctx.check(shifted(ms.I, 6) == IndexSet{5, 6, 8, 9} && shifted(ms.J, 6) == IndexSet{1, 4, 5, 7}, "I = {5,6,8,9}, J = {1,4,5,7}");
        const IndexSet I = {5, 6, 8, 9}, J = {1, 4, 5, 7};
        auto S = [&](int k) { return shape_invariant(x, k); };
        auto rQ = [&](int i, int j) { return reduced_q_invariant(x, i, j); };
        Q value = ssyt_sum(s, x);
        ctx.check(value == rQ(1, 2) * rQ(2, 2) * S(3) * S(3) - rQ(1, 2) * S(2), "s = rQ_1^(2) rQ_2^(2) S_3^2 - rQ_1^(2) S_2");
        auto Mp = build_Mtilde_prime(x);
        ctx.check(periodic_minor(Mp, I, J) == value, "Delta_{I,J}(M~') = s");
        Matrix<Q> want = from_rows<Q>({{rQ(1, 2), 0, -S(2) / S(3), 0}, {1, S(3), 0, 0}, {0, rQ(1, 2), rQ(2, 2), 0}, {0, 1, rQ(1, 3), S(3)}});
        ctx.check(Mp.window(I, J) == want, "the displayed 4 x 4 submatrix of M~'");
        auto Mt = build_Mtilde(x);
        auto E = [&](int k, int r) { return loop_E(x, k, r); };
        Matrix<Q> jt = from_rows<Q>({{E(1, 2), E(4, 2), E(5, 2), 0}, {1, E(3, 3), E(4, 3), 0}, {0, E(1, 2), E(2, 2), E(4, 2)}, {0, 1, E(1, 3), E(3, 3)}});
        ctx.check(Mt.window(I, J) == jt, "the displayed 4 x 4 submatrix of M~");
        ctx.check(det(jt) == value, "Jacobi-Trudi determinant = s");
    });
    // m = 3, n = 5: Q_1^(2) = s^(4)_{(8,8)/(4)} as an 8 x 8 minor of M~'.
    add(plan, 3, 5, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(3, 5);
        ctx.witness["x"] = to_json(x);
        Q q = q_invariant(x, 1, 2);
        ctx.check(q == ssyt_sum(ColoredSkewShape(Partition{8, 8}, Partition{4}, 4, 5), x), "Q_1^(2) = s^(4)_{(8,8)/(4)}");
        ctx.check(q == periodic_minor(build_Mtilde_prime(x), {2, 3, 4, 5, 7, 8, 9, 10}, interval(1, 8)),
                  "Q_1^(2) = Delta_{{2,3,4,5,7,8,9,10},[1,8]}(M~')");
    });
    // m = 5, n = 3: entries and determinant of the folded M~'.
    add(plan, 5, 3, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(5, 3);
        ctx.witness["x"] = to_json(x);
        auto F = fold(build_Mtilde_prime(x));
        auto S = [&](int k) { return shape_invariant(x, k); };
        auto rQ = [&](int i, int j) { return reduced_q_invariant(x, i, j); };
        ctx.check(F(1, 3) == TPoly<Q>(std::vector<Q>{S(1) / S(2), rQ(4, 1), rQ(1, 1)}), "entry (1,3) = S1/S2 + rQ_4^(1) t + rQ_1^(1) t^2");
        ctx.check(F(3, 1) == TPoly<Q>(std::vector<Q>{S(3), 1}), "entry (3,1) = S3 + t");
        ctx.check(F(2, 2) == TPoly<Q>(std::vector<Q>{-S(2) / S(3), rQ(2, 2)}), "entry (2,2) = -S2/S3 + rQ_2^(2) t");
        auto D = det(F);
        std::vector<Q> pi;
        for (int i = 1; i <= 5; ++i) pi.push_back(x(i, 1) * x(i, 2) * x(i, 3));
        bool ok = true;
        for (int d = 0; d <= 5; ++d) {
            Q e = 0;
            for (const auto& A : combinations(interval(1, 5), 5 - d)) {
                Q p = 1;
                for (int v : A) p *= pi[v - 1];
                e += p;
            }
            ok = ok && D.coeff(d) == e;
        }
        ctx.check(ok && D.degree() == 5, "det = sum_d e_{5-d}(pi_1, ..., pi_5) t^d");
    });
}

void unfolded_examples(SuitePlan& plan) {
    // d = 0: bottom-left minors of M~ and Mbar are shape invariants.
    add(plan, 4, 4, [](TaskContext& ctx, TrialRng& rng) {
        for (int m = 2; m <= 4; ++m)
            for (int n = 2; n <= 4; ++n) {
                auto x = rng.positive_matrix(m, n);
                auto Mt = build_Mtilde(x);
                auto Mb = build_Mbar(x);
                for (int a = std::max(1, n - m); a <= n; ++a) {
                    Q l = periodic_minor(Mt, interval(n + 1 - a, n), interval(1, a));
                    Q r = minor(Mb, interval(n + 1 - a, m), interval(1, m - n + a));
                    ctx.check(l == r && l == shape_invariant(x, n + 1 - a), "Delta(M~) = Delta(Mbar) = S_{n+1-a}",
                              {{"m", m}, {"n", n}, {"a", a}, {"x", to_json(x)}});
                }
            }
    });
    // m = n = 3: Mbar and the Q-invariants as sums of products of minors.
    add(plan, 3, 3, [](TaskContext& ctx, TrialRng& rng) {
        auto X = symbolic_point(3, 3);
        auto Mb = build_Mbar(X);
        auto Eb = [&](int k, int r) { return barred_E(X, k, r); };
        Poly z;
        ctx.check(Mb == from_rows<Poly>({{Eb(3, 1), z, z}, {Eb(2, 2), Eb(3, 2), z}, {Eb(1, 3), Eb(2, 3), Eb(3, 3)}}), "Mbar for m = n = 3");
        auto D = [&](const IndexSet& I, const IndexSet& J) { return minor(Mb, I, J); };
        auto sb = [&](Partition l, Partition mu, int r) { return barred_skew_schur(ColoredSkewShape(l, mu, r, 3), X); };
        ctx.check(D({3}, {1}) == sb({1}, {}, 3), "Delta_{3,1} = sbar^(3)_(1)");
        ctx.check(D({1, 3}, {1, 2}) == sb({2, 2, 2}, {1}, 2), "Delta_{13,12} = sbar^(2)_{(2,2,2)/(1)}");
        ctx.check(D({3}, {2}) == sb({1, 1}, {}, 3), "Delta_{3,2} = sbar^(3)_(1,1)");
        ctx.check(D({2, 3}, {1, 2}) == sb({2, 2}, {}, 3), "Delta_{23,12} = sbar^(3)_(2,2)");
        ctx.check(D({2, 3}, {1, 3}) == sb({2, 2, 1}, {}, 3), "Delta_{23,13} = sbar^(3)_(2,2,1)");
        ctx.check(D({2}, {1}) == sb({1, 1}, {}, 2), "Delta_{2,1} = sbar^(2)_(1,1)");
        ctx.check(D({1, 2}, {1, 2}) == sb({2, 2, 2}, {}, 2), "Delta_{12,12} = sbar^(2)_(2,2,2)");
        ctx.check(D({2, 3}, {2, 3}) == sb({2, 2, 2}, {}, 3), "Delta_{23,23} = sbar^(3)_(2,2,2)");
        auto Mt = build_Mtilde(X);
        Poly q11 = q_invariant(X, 1, 1), q12 = q_invariant(X, 1, 2), q21 = q_invariant(X, 2, 1);
        ctx.check(q11 == ssyt_sum(ColoredSkewShape(Partition{4, 2}, Partition{}, 3, 3), X), "Q_1^(1) = s^(3)_(4,2)");
        ctx.check(q12 == ssyt_sum(ColoredSkewShape(Partition{4, 4}, Partition{2}, 2, 3), X), "Q_1^(2) = s^(2)_{(4,4)/(2)}");
        ctx.check(q21 == ssyt_sum(ColoredSkewShape(Partition{5, 5}, Partition{}, 3, 3), X), "Q_2^(1) = s^(3)_(5,5)");
        ctx.check(q11 == periodic_minor(Mt, {3, 4, 5, 6}, {1, 2, 4, 5}) &&
                      q11 == D({3}, {1}) * D({1, 3}, {1, 2}) + D({3}, {2}) * D({2, 3}, {1, 2}),
                  "Q_1^(1) = Delta_{3456,1245}(M~) = sum of two products");
        ctx.check(q12 == periodic_minor(Mt, {2, 3, 5, 6}, {1, 2, 3, 4}) &&
                      q12 == D({2, 3}, {1, 2}) * D({2}, {1}) + D({2, 3}, {1, 3}) * D({3}, {1}),
                  "Q_1^(2) = Delta_{2356,1234}(M~) = sum of two products");
        Poly sum;
        for (const auto& S : combinations(interval(1, 3), 2)) sum += D({2, 3}, S) * D(S, {1, 2});
        ctx.check(q21 == periodic_minor(Mt, {2, 3, 4, 5, 6}, {1, 2, 3, 4, 5}) && q21 == sum,
                  "Q_2^(1) = Delta_{23456,12345}(M~) = sum over X");
        (void)rng;
    });
    // Laurent expressions of reduced Q-invariants and the central charge in the entries of Q.
    add(plan, 3, 3, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(3, 3);
        ctx.witness["x"] = to_json(x);
        auto Mb = build_Mbar(x);
        auto D = [&](const IndexSet& I, const IndexSet& J) { return minor(Mb, I, J); };
        auto zq = grsk(x).Q;
        auto z = [&](int a, int b) { return zq(a, b); };
        Q r11 = reduced_q_invariant(x, 1, 1), r12 = reduced_q_invariant(x, 1, 2), r21 = reduced_q_invariant(x, 2, 1);
        ctx.check(r11 == D({1, 3}, {1, 2}) / D({2, 3}, {1, 2}) + D({3}, {2}) / D({3}, {1}), "rQ_1^(1) by Mbar minors");
        ctx.check(r11 == z(1, 2) / z(2, 3) + z(1, 1) / z(2, 2) + z(1, 2) / z(1, 1) + z(2, 3) / z(2, 2), "rQ_1^(1) in the entries of Q");
        ctx.check(r12 == D({2}, {1}) / D({3}, {1}) + D({2, 3}, {1, 3}) / D({2, 3}, {1, 2}), "rQ_1^(2) by Mbar minors");
        ctx.check(r12 == z(2, 2) / z(3, 3) + z(1, 3) / z(1, 2), "rQ_1^(2) in the entries of Q");
        Q S2 = shape_invariant(x, 2);
        ctx.check(r21 == q_invariant(x, 2, 1) / (S2 * S2), "rQ_2^(1) = Q_2^(1) / S_2^2");
        ctx.check(r21 == z(1, 2) * z(2, 2) / (z(2, 3) * z(3, 3)) + z(1, 3) / z(2, 3) + z(1, 1) * z(1, 3) / (z(1, 2) * z(2, 2)) +
                             z(1, 3) / z(1, 1),
                  "rQ_2^(1) in the entries of Q");
        Q cc = central_charge_def(x);
        ctx.check(cc == z(1, 2) / z(1, 1) + z(1, 3) / z(1, 2) + z(2, 3) / z(2, 2) + z(1, 1) / z(2, 2) + z(1, 2) / z(2, 3) +
                            z(2, 2) / z(3, 3) + z(3, 3),
                  "central charge in the entries of Q");
        ctx.check(cc == r11 + r12 + loop_E(x, 1, 3), "central charge = rQ_1^(1) + rQ_1^(2) + E_1^(3)");
        ctx.check(shape_invariant(x, 3) == loop_E(x, 1, 3) && loop_E(x, 1, 3) == z(3, 3), "S_3 = E_1^(3) = z'_33");
    });
}

void energy_examples(SuitePlan& plan) {
    // m = 6, n = 2: D = s^(2)_{(5,4,3,2,1)} in two determinantal forms.
    add(plan, 6, 2, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(6, 2);
        ctx.witness["x"] = to_json(x);
        Q D = energy_D(x);
        ctx.check(D == ssyt_sum(ColoredSkewShape(Partition{5, 4, 3, 2, 1}, Partition{}, 2, 2), x), "D = s^(2)_(5,4,3,2,1)");
        auto E = [&](int k, int r) { return loop_E(x, k, r); };
        Matrix<Q> jt = from_rows<Q>({{E(1, 2), E(3, 2), E(5, 2), 0, 0},
                                     {1, E(2, 1), E(4, 1), E(6, 1), 0},
                                     {0, E(1, 2), E(3, 2), E(5, 2), 0},
                                     {0, 1, E(2, 1), E(4, 1), E(6, 1)},
                                     {0, 0, E(1, 2), E(3, 2), E(5, 2)}});
        ctx.check(det(jt) == D, "D as a 5 x 5 determinant of loop elementary functions");
        auto S = [&](int k) { return shape_invariant(x, k); };
        auto rQ = [&](int i, int j) { return reduced_q_invariant(x, i, j); };
        Matrix<Q> mp = from_rows<Q>({{rQ(1, 2), rQ(3, 2), S(2), 0, 0},
                                     {1, rQ(2, 1), rQ(4, 1), 0, 0},
                                     {0, rQ(1, 2), rQ(3, 2), S(2), 0},
                                     {0, 1, rQ(2, 1), rQ(4, 1), 0},
                                     {0, 0, rQ(1, 2), rQ(3, 2), S(2)}});
        ctx.check(det(mp) == D, "D as a 5 x 5 determinant in reduced Q-invariants");
        const int m = 6, n = 2;
        IndexSet J;
        for (int k = 0; k <= m - 2; ++k)
            for (int v = k * n + 1; v <= (k + 1) * n - 1; ++v) J.push_back(v);
        IndexSet I = interval(m, (m - 1) * n);
        auto Mp = build_Mtilde_prime(x);
        ctx.check(Mp.window(I, J) == mp, "the reduced-Q matrix is the submatrix of M~' on I = [m,(m-1)n]");
        ctx.check(build_Mtilde(x).window(I, J) == jt, "the E matrix is the submatrix of M~ on the same sets");
    });
    // m = 4, n = 5: the three factors of the product formula.
    add(plan, 4, 5, [](TaskContext& ctx, TrialRng& rng) {
        auto x = rng.positive_matrix(4, 5);
        ctx.witness["x"] = to_json(x);
        auto Mb = build_Mbar(x);
        auto D = [&](const IndexSet& I, const IndexSet& J) { return minor(Mb, I, J); };
        Q p1 = Mb(1, 1), p2 = Mb(2, 2);
        Q D1 = D({2, 3, 4}, {1, 2, 3}) + p1 * D({2, 4}, {1, 2}) + p1 * D({3, 4}, {1, 3}) + p1 * p1 * D({4}, {1});
        Q D2 = D({3, 4}, {2, 3}) + p2 * D({4}, {2});
        Q D3 = D({4}, {3});
        ctx.check(energy_product_factor(x, 1) == D1 && energy_product_factor(x, 2) == D2 && energy_product_factor(x, 3) == D3,
                  "the factors D_1, D_2, D_3");
        ctx.check(energy_D(x) == D1 * D2 * D3, "D = D_1 D_2 D_3");
        auto sb = [&](Partition l, Partition mu, int r) { return barred_skew_schur(ColoredSkewShape(l, mu, r, 4), x); };
        ctx.check(D({2, 3, 4}, {1, 2, 3}) == sb({3, 3, 3, 3, 3}, {}, 4) || D({2, 3, 4}, {1, 2, 3}) == sb({3, 3, 3, 3}, {}, 4),
                  "Delta_{234,123} is a barred rectangle of color 4");
        ctx.check(p1 == sb({1, 1, 1, 1, 1}, {}, 1), "pi_1 = sbar^(1)_(1^5)");
        ctx.check(D({2, 4}, {1, 2}) == sb({2, 2, 2, 2}, {1}, 3), "Delta_{24,12} = sbar^(3)_{(2,2,2,2)/(1)}");
        ctx.check(D({3, 4}, {1, 3}) == sb({2, 2, 2, 1}, {}, 4), "Delta_{34,13} = sbar^(4)_(2,2,2,1)");
        ctx.check(D({4}, {1}) == sb({1, 1}, {}, 4), "Delta_{4,1} = sbar^(4)_(1,1)");
        ctx.check(D({3, 4}, {2, 3}) == sb({2, 2, 2, 2}, {}, 4), "Delta_{34,23} = sbar^(4)_(2,2,2,2)");
        ctx.check(D({4}, {2}) == sb({1, 1, 1}, {}, 4), "Delta_{4,2} = sbar^(4)_(1,1,1)");
        ctx.check(D({4}, {3}) == sb({1, 1, 1, 1}, {}, 4), "Delta_{4,3} = sbar^(4)_(1,1,1,1)");
    });
}

void cocharge_examples(SuitePlan& plan) {
    add(plan, 4, 4, [](TaskContext& ctx, TrialRng& rng) {
        GTPattern<Q> z(4, 4);
        for (auto& [k, v] : z.z) v = rng.positive_rational();
        ctx.witness["z"] = to_json(z);
        auto Z = [&](int i, int j) { return z(i, j); };
        ctx.check(sigma_k(z, 2) == Z(2, 2), "sigma_2 = z_22");
        ctx.check(sigma_k(z, 3) == Z(2, 3) * Z(3, 3) * Z(3, 3) / Z(2, 2) * (Z(2, 2) / Z(3, 3) + Z(1, 3) / Z(1, 2)), "sigma_3");
        Q pre = Z(2, 4) * Z(3, 4) * Z(3, 4) * Z(4, 4) * Z(4, 4) * Z(4, 4) / (Z(2, 3) * Z(3, 3) * Z(3, 3));
        Q sum = Z(2, 3) * Z(3, 3) * Z(3, 3) / (Z(3, 4) * Z(4, 4) * Z(4, 4)) +
                Z(1, 4) * Z(2, 3) * Z(3, 3) / (Z(1, 3) * Z(3, 4) * Z(4, 4)) + Z(1, 4) * Z(2, 2) / (Z(1, 3) * Z(4, 4)) +
                Z(1, 4) * Z(3, 3) / (Z(1, 2) * Z(4, 4)) + Z(1, 4) * Z(2, 4) * Z(3, 3) / (Z(1, 3) * Z(2, 3) * Z(4, 4)) +
                Z(1, 4) * Z(1, 4) * Z(2, 4) / (Z(1, 3) * Z(1, 3) * Z(2, 3));
        ctx.check(sigma_k(z, 4) == pre * sum, "sigma_4");
        GTPattern<Trop> t(4, 4);
        for (auto& [k, v] : t.z) v = Trop(rng.uniform(-5, 5));
        ctx.witness["trop_z"] = to_json(t);
        auto T = [&](int i, int j) { return t(i, j).v; };
        long want = T(2, 3) + 2 * T(3, 3) + std::min(T(2, 2) - T(3, 3), T(1, 3) - T(1, 2));
        ctx.check((sigma_k(t, 2) * sigma_k(t, 3)).v == want,
                  "Trop(sigma_2) + Trop(sigma_3) = z_23 + 2 z_33 + min(z_22 - z_33, z_13 - z_12)");
    });
    add(plan, 4, 4, [](TaskContext& ctx, TrialRng& rng) {
        GTPattern<Q> z(4, 4);
        for (auto& [k, v] : z.z) v = rng.positive_rational();
        ctx.witness["z"] = to_json(z);
        auto Z = [&](int i, int j) { return z(i, j); };
        struct Row {
            std::vector<std::vector<int>> p;  // rows j = 1..3, entries p_{1j}..p_{jj}
            Q w;
        };
        std::vector<Row> table = {
            {{{0}, {0, 0}, {0, 0, 0}}, Q(1)},
            {{{0}, {0, 0}, {1, 0, 0}}, Z(1, 3) * Z(3, 3) / (Z(1, 4) * Z(4, 4))},
            {{{0}, {1, 0}, {1, 0, 0}}, Z(1, 3) * Z(1, 3) * Z(2, 3) * Z(3, 3) / (Z(1, 2) * Z(1, 4) * Z(2, 4) * Z(4, 4))},
            {{{0}, {1, 0}, {1, 1, 0}}, Z(1, 3) * Z(2, 2) * Z(2, 3) / (Z(1, 4) * Z(2, 4) * Z(4, 4))},
            // The printed table lists z14 z23 z33 / (z13 z34 z44) here; that value breaks
            // sigma_4 = beta_4^2 z_44 sum wt, while the product of diamond ratios below restores it.
            {{{1}, {1, 0}, {1, 1, 0}}, Z(1, 3) * Z(2, 3) * Z(2, 3) * Z(3, 3) / (Z(1, 4) * Z(2, 4) * Z(3, 4) * Z(4, 4))},
            {{{1}, {1, 0}, {2, 1, 0}},
             Z(1, 3) * Z(1, 3) * Z(2, 3) * Z(2, 3) * Z(3, 3) * Z(3, 3) / (Z(1, 4) * Z(1, 4) * Z(2, 4) * Z(3, 4) * Z(4, 4) * Z(4, 4))},
        };
        std::vector<KBPattern> listed;
        for (const auto& row : table) {
            KBPattern q(4);
            for (int j = 1; j <= 3; ++j)
                for (int i = 1; i <= j; ++i) q.at(i, j) = row.p[j - 1][i - 1];
            listed.push_back(q);
        }
        auto pats = kb_patterns(4);
        std::sort(pats.begin(), pats.end());
        auto sorted = listed;
        std::sort(sorted.begin(), sorted.end());
        ctx.check(pats == sorted, "P_3 is the six listed patterns");
        Q total = 0;
        for (std::size_t a = 0; a < table.size(); ++a) {
            Q w = kb_weight(listed[a], z);
            ctx.check(w == table[a].w, "weight of a listed pattern", {{"row", a + 1}});
            total += w;
        }
        ctx.check(kb_sigma(z, 4) == power(beta(z, 4), 2) * Z(4, 4) * total, "sigma_4 = beta_4^2 z_44 sum of the six weights");
    });
}

void cylindric_examples(SuitePlan& plan) {
    add(plan, 4, 7, [](TaskContext& ctx, TrialRng& rng) {
        CylShape s(Partition{5, 5, 5, 5, 2, 1}, Partition{2}, 5, 5, 7);
        auto r1 = border_strip_remove(s);
        auto r2 = r1 ? border_strip_remove(*r1) : std::nullopt;
        auto r3 = r2 ? border_strip_remove(*r2) : std::nullopt;
        ctx.check(r1 && r1->lambda == Partition{5, 5, 5, 1} && r1->mu == Partition{2}, "R(lambda/mu) = (5,5,5,1)/(2)");
        ctx.check(r2 && r2->lambda == Partition{5, 4} && r2->mu == Partition{2}, "R^2(lambda/mu) = (5,4)/(2)");
        ctx.check(!r3, "R^3(lambda/mu) is undefined");
        ctx.check(d_max(s) == 2 && shortest_diagonal(s) == 2, "d_max = shortest diagonal = 2");
        const IndexSet I = {1, 2, 3, 5, 6}, J = {1, 2, 3, 5, 7};
        ctx.check(lambda_of_J(J, 4) == s.lambda && mu_of_I(I) == s.mu, "lambda_J and mu_I for I = {1,2,3,5,6}, J = {1,2,3,5,7}");
        auto x = rng.positive_matrix(4, 7);
        ctx.witness["x"] = to_json(x);
        auto d = minor(folded_M(x), I, J);
        ctx.check(cyl_schur(s, x) == 0, "cs_{lambda/mu; 5} vanishes (column of length 5 > m)");
        ctx.check(d.coeff(0) == 0 && d.coeff(1) == cyl_schur(*r1, x) && d.coeff(2) == cyl_schur(*r2, x) && d.degree() == 2,
                  "Delta_{I,J}(M^(t)) = t cs_R + t^2 cs_{R^2}");
    });
    add(plan, 7, 5, [](TaskContext& ctx, TrialRng& rng) {
        auto cm = cyl_maya(Partition{3, 3, 3, 3, 2, 1}, Partition{2}, 4, 3, 7, 5);
        ctx.check(cm.I == IndexSet{2, 4, 5} && cm.J == IndexSet{-1, 1, 3}, "I(mu,4) = {2,4,5}, J(lambda,4) = {-1,1,3}");
        ctx.check(d_star(cm.I, 5) == 0 && d_star(cm.J, 5) == 1 && cm.d_star == 1, "d_*(I) = 0, d_*(J) = 1");
        ctx.check(cm.I_hat == IndexSet{2, 4, 5} && cm.J_hat == IndexSet{1, 3, 4}, "reduced sets {2,4,5} and {1,3,4}");
        auto x = rng.positive_matrix(7, 5);
        ctx.witness["x"] = to_json(x);
        CylShape s(Partition{3, 3, 3, 3, 2, 1}, Partition{2}, 3, 4, 5);
        auto fam = cyl_family_sums(x, cm.I_hat, cm.J_hat, 1);
        Q coeff = minor(folded_M(x), {2, 4, 5}, {1, 3, 4}).coeff(1);
        ctx.check(coeff == fam[1], "[t] Delta_{245,134}(M^(t)) = cylinder families of winding 1");
        ctx.check(cyl_schur(s, x) == coeff, "cs^(4)_{(3,3,3,3,2,1)/(2); 3} = [t] Delta_{245,134}(M^(t))");
    });
}

}  // namespace

SuitePlan plan_paper_examples(const VerifyOptions&) {
    SuitePlan plan;
    plan.notes.push_back("fixed worked examples; random rational points stand in for symbolic variables where division is needed");
    gt_and_grsk_examples(plan);
    loop_schur_examples(plan);
    det_examples(plan);
    unfolded_examples(plan);
    energy_examples(plan);
    cocharge_examples(plan);
    cylindric_examples(plan);
    return plan;
}

}  // namespace lsym::detail
