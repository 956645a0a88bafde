/**
 * @file suites_crystal.cpp
 * @brief Suites for the geometric crystal axioms, the geometric R-matrix and gRSK.
 */
#include "lsym/loop_schur.hpp"
#include "verify_internal.hpp"

namespace lsym::detail {

namespace {

template <class T>
bool same_readout(const CrystalReadout<T>& a, const CrystalReadout<T>& b) {
    return a.gamma == b.gamma && a.eps == b.eps && a.phi == b.phi;
}

template <class T>
bool same_pair(const PQPair<T>& a, const PQPair<T>& b) {
    return a.P == b.P && a.Q == b.Q;
}

/** Braid relations and commutation of e with ebar, shared by both value domains. */
template <class T>
void braid_and_bicrystal(TaskContext& ctx, const Matrix<T>& x, const T& c, const T& c2, const std::string& tag) {
    const int m = x.rows();
    const int n = x.cols();
    for (int i = 1; i < m; ++i) {
        ctx.check(apply_e(apply_e(x, i, c), i, c2) == apply_e(x, i, T(c * c2)), tag + "action e_i^c e_i^c' = e_i^{cc'}",
                  {{"i", i}});
        for (int j = i + 1; j < m; ++j) {
            if (j - i > 1) {
                ctx.check(apply_e(apply_e(x, j, c2), i, c) == apply_e(apply_e(x, i, c), j, c2), tag + "far e_i e_j commute",
                          {{"i", i}, {"j", j}});
            } else {
                Matrix<T> lhs = apply_e(apply_e(apply_e(x, i, c2), j, T(c * c2)), i, c);
                Matrix<T> rhs = apply_e(apply_e(apply_e(x, j, c), i, T(c * c2)), j, c2);
                ctx.check(lhs == rhs, tag + "braid e_i^c e_j^{cc'} e_i^{c'} = e_j^{c'} e_i^{cc'} e_j^c", {{"i", i}, {"j", j}});
            }
        }
        for (int j = 1; j < n; ++j) {
            ctx.check(apply_e(apply_e_bar(x, j, c2), i, c) == apply_e_bar(apply_e(x, i, c), j, c2),
                      tag + "bicrystal e_i ebar_j commute", {{"i", i}, {"j", j}});
            auto before = product_maps_recursive(x, i);
            auto after = product_maps_recursive(apply_e_bar(x, j, c2), i);
            ctx.check(before.eps == after.eps && before.phi == after.phi, tag + "bicrystal eps_i, phi_i fixed by ebar_j",
                      {{"i", i}, {"j", j}});
        }
    }
}

}  // namespace

SuitePlan plan_crystal_axioms(const VerifyOptions& opts) {
    SuitePlan plan;
    for_each_size(opts, [&](int m, int n) {
        for (int t = 0; t < opts.trials; ++t)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      Rational c = rng.positive_rational(), c2 = rng.positive_rational();
                                      ctx.witness["x"] = to_json(x);
                                      ctx.witness["c"] = to_json(c);
                                      ctx.witness["c2"] = to_json(c2);
                                      for (int i = 1; i < m; ++i) {
                                          auto r = product_maps(x, i);
                                          ctx.check(same_readout(r, product_maps_recursive(x, i)),
                                                    "readout from M(x^1..x^n) = recursive product rule", {{"i", i}});
                                          ctx.check(r.phi / r.eps == r.gamma[i - 1] / r.gamma[i], "phi_i/eps_i = gamma_i/gamma_{i+1}",
                                                    {{"i", i}});
                                          auto y = apply_e(x, i, c);
                                          auto ry = product_maps(y, i);
                                          auto g = r.gamma;
                                          g[i - 1] *= c;
                                          g[i] /= c;
                                          ctx.check(ry.gamma == g, "gamma(e_i^c x) = alpha_i(c) gamma(x)", {{"i", i}});
                                          ctx.check(ry.eps == r.eps / c && ry.phi == c * r.phi,
                                                    "eps(e^c x) = eps/c and phi(e^c x) = c phi", {{"i", i}});
                                          ctx.check(apply_e(x, i, Rational(1)) == x, "e_i^1 = id", {{"i", i}});
                                          Matrix<Rational> lhs = column_product(y);
                                          Matrix<Rational> rhs = unipotent<Rational>(m, i, Rational((c - 1) * r.phi)) *
                                                                 column_product(x) *
                                                                 unipotent<Rational>(m, i, Rational((1 / c - 1) * r.eps));
                                          ctx.check(lhs == rhs, "M(e_i^c x) = x_i((c-1)phi) M x_i((1/c-1)eps)", {{"i", i}});
                                      }
                                      for (int j = 1; j < n; ++j) {
                                          auto r = bar_maps(x, j);
                                          ctx.check(r.phi / r.eps == r.gamma[j - 1] / r.gamma[j],
                                                    "barred phi_j/eps_j = gamma_j/gamma_{j+1}", {{"j", j}});
                                          auto ry = bar_maps(apply_e_bar(x, j, c), j);
                                          ctx.check(ry.eps == r.eps / c && ry.phi == c * r.phi, "barred eps and phi under ebar_j^c",
                                                    {{"j", j}});
                                      }
                                      braid_and_bicrystal(ctx, x, c, c2, "");
                                      auto tx = random_trop(rng, m, n, -4, 4);
                                      Trop tc(rng.uniform(-3, 3)), tc2(rng.uniform(-3, 3));
                                      ctx.witness["trop_x"] = to_json(tx);
                                      ctx.witness["trop_c"] = {tc.v, tc2.v};
                                      braid_and_bicrystal(ctx, tx, tc, tc2, "min-plus ");
                                  }});
    });
    return plan;
}

SuitePlan plan_r_matrix(const VerifyOptions& opts) {
    SuitePlan plan;
    auto body = [](TaskContext& ctx, const auto& x, const std::string& tag) {
        const int m = x.rows();
        const int n = x.cols();
        for (int i = 1; i < m; ++i) {
            auto y = row_R(x, i);
            ctx.check(reflect(x, i) == y, tag + "R_i = s_i (Weyl reflection)", {{"i", i}});
            ctx.check(row_R(y, i) == x, tag + "R_i is an involution", {{"i", i}});
            bool inv = true;
            for (int k = 0; k <= m && inv; ++k)
                for (int r = 1; r <= n && inv; ++r) inv = loop_E(y, k, r) == loop_E(x, k, r);
            ctx.check(inv, tag + "E_k^(r) invariant under R_i", {{"i", i}});
            for (int j = 1; j < n; ++j) {
                using T = std::decay_t<decltype(x(1, 1))>;
                auto c = x(1, 1) / x(m, n);
                ctx.check(row_R(apply_e_bar(x, j, T(c)), i) == apply_e_bar(y, j, T(c)), tag + "R_i commutes with ebar_j",
                          {{"i", i}, {"j", j}});
            }
            if (i + 1 < m)
                ctx.check(row_R(row_R(y, i + 1), i) == row_R(row_R(row_R(x, i + 1), i), i + 1),
                          tag + "braid R_i R_{i+1} R_i = R_{i+1} R_i R_{i+1}", {{"i", i}});
        }
    };
    for_each_size(
        opts,
        [&](int m, int n) {
            for (int t = 0; t < opts.trials; ++t)
                plan.tasks.push_back({m, n, [m, n, body](TaskContext& ctx, TrialRng& rng) {
                                          auto x = rng.positive_matrix(m, n);
                                          ctx.witness["x"] = to_json(x);
                                          body(ctx, x, "");
                                          auto tx = random_trop(rng, m, n, -4, 4);
                                          ctx.witness["trop_x"] = to_json(tx);
                                          body(ctx, tx, "min-plus ");
                                      }});
        },
        2, 1);
    return plan;
}

SuitePlan plan_grsk(const VerifyOptions& opts) {
    SuitePlan plan;
    for_each_size(opts, [&](int m, int n) {
        for (int t = 0; t < opts.trials; ++t)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      Rational c = rng.positive_rational();
                                      ctx.witness["x"] = to_json(x);
                                      ctx.witness["c"] = to_json(c);
                                      auto pq = grsk(x);
                                      ctx.check(same_pair(pq, grsk_transposed(x)), "highway (row) formula = underway (column) formula");
                                      ctx.check(same_pair(pq, grsk_psi(x)), "path families = Psi of the two products by determinants");
                                      auto tr = grsk(x.transpose());
                                      ctx.check(tr.P == pq.Q && tr.Q == pq.P, "grsk(x^t) = (Q, P)");
                                      auto back = unglue(glue(pq));
                                      ctx.check(same_pair(back, pq), "unglue(glue(P, Q)) = (P, Q)");
                                      const int p = std::min(m, n);
                                      for (int k = 1; k <= p; ++k) {
                                          Rational sh = shape_invariant(x, k) / shape_invariant(x, k + 1);
                                          ctx.check(pq.P(k, n) == sh && pq.Q(k, m) == sh, "shape of P and Q = S_k / S_{k+1}",
                                                    {{"k", k}});
                                      }
                                      for (int j = 1; j < n; ++j) {
                                          auto lhs = grsk(apply_e_bar(x, j, c));
                                          ctx.check(lhs.P == gt_apply_e(pq.P, j, c) && lhs.Q == pq.Q,
                                                    "grsk(ebar_j^c x) = (e_j^c P, Q)", {{"j", j}});
                                          auto a = bar_maps(x, j);
                                          auto b = gt_maps(pq.P, j);
                                          ctx.check(a.eps == b.eps && a.phi == b.phi, "eps_j, phi_j of x (barred) = those of P",
                                                    {{"j", j}});
                                      }
                                      for (int i = 1; i < m; ++i) {
                                          auto lhs = grsk(apply_e(x, i, c));
                                          ctx.check(lhs.P == pq.P && lhs.Q == gt_apply_e(pq.Q, i, c), "grsk(e_i^c x) = (P, e_i^c Q)",
                                                    {{"i", i}});
                                      }
                                      auto tx = random_trop(rng, m, n);
                                      ctx.witness["trop_x"] = to_json(tx);
                                      auto tp = grsk(tx);
                                      ctx.check(same_pair(tp, grsk_transposed(tx)), "min-plus highway formula = underway formula");
                                      auto tt = grsk(tx.transpose());
                                      ctx.check(tt.P == tp.Q && tt.Q == tp.P, "min-plus grsk(x^t) = (Q, P)");
                                  }});
    });
    return plan;
}

}  // namespace lsym::detail
