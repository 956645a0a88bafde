/**
 * @file suites_energy.cpp
 * @brief Suites for decorations, the central charge, the energy, geometric
 *        cocharge, and the min-plus comparisons with RSK, Burge and cocharge.
 */
#include "lsym/comb.hpp"
#include "lsym/energy.hpp"
#include "verify_internal.hpp"

namespace lsym::detail {

namespace {

/** Rows reordered by row sum (stable), increasing or decreasing. */
IntMatrix sort_rows_by_sum(const IntMatrix& a, bool increasing) {
    std::vector<std::vector<long>> rows(a.rows());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) rows[i - 1].push_back(a(i, j));
    auto sum = [](const std::vector<long>& v) {
        long s = 0;
        for (long x : v) s += x;
        return s;
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const auto& p, const auto& q) { return increasing ? sum(p) < sum(q) : sum(p) > sum(q); });
    IntMatrix out(a.rows(), a.cols());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) out(i, j) = rows[i - 1][j - 1];
    return out;
}

template <class T>
GTPattern<T> random_pattern(int h, const std::function<T()>& draw) {
    GTPattern<T> z(h, h);
    for (auto& [k, v] : z.z) v = draw();
    return z;
}

long factorial(int k) {
    long f = 1;
    for (int a = 2; a <= k; ++a) f *= a;
    return f;
}

}  // namespace

SuitePlan plan_decoration(const VerifyOptions& opts) {
    SuitePlan plan;
    for_each_size(opts, [&](int m, int n) {
        for (int t = 0; t < opts.trials; ++t)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      ctx.witness["x"] = to_json(x);
                                      auto pq = grsk(x);
                                      ctx.check(decoration_gt(pq.P) == decoration_gt_minors(pq.P), "F(P) by its sum = F(P) by minors of Phi(P)");
                                      ctx.check(decoration_gt(pq.Q) == decoration_gt_minors(pq.Q), "F(Q) by its sum = F(Q) by minors of Phi(Q)");
                                      Rational rhs = decoration_gt(pq.P) + decoration_gt(pq.Q);
                                      if (m == n) rhs += pq.P(n, n);
                                      ctx.check(decoration_mat(x) == rhs, "F(x) = F(P) + F(Q) + delta_{mn} z_{nn}");
                                      ctx.check(decoration_P_rho(x) == decoration_gt(pq.P), "F(P) = sum of rho up/down pseudo-energies over S_k");
                                      auto tx = random_trop(rng, m, n);
                                      ctx.witness["trop_x"] = to_json(tx);
                                      auto tp = grsk(tx);
                                      Trop trhs = decoration_gt(tp.P) + decoration_gt(tp.Q);
                                      if (m == n) trhs = trhs + tp.P(n, n);
                                      ctx.check(decoration_mat(tx) == trhs, "min-plus F(x) = F(P) + F(Q) + delta_{mn} z_{nn}");
                                      ctx.check(decoration_P_rho(tx) == decoration_gt(tp.P), "min-plus F(P) through rho shapes");
                                  }});
    });
    return plan;
}

SuitePlan plan_central_charge(const VerifyOptions& opts) {
    SuitePlan plan;
    for_each_size(opts, [&](int m, int n) {
        for (int t = 0; t < opts.trials; ++t)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      Rational c = rng.positive_rational();
                                      ctx.witness["x"] = to_json(x);
                                      ctx.witness["c"] = to_json(c);
                                      Rational def = central_charge_def(x);
                                      ctx.check(central_charge_A(x) == def, "F(x) - F(P) = F(Q) + delta_{mn} S_n");
                                      ctx.check(central_charge_B(x) == def, "F(x) - F(P) = sum_j rQ_1^(j) + delta_{mn} E_1^(n)");
                                      for (int j = 1; j <= std::min(m - 1, n); ++j)
                                          ctx.check(reduced_q_invariant(x, 1, j) == q_decomposition_rhs(x, j),
                                                    "rQ_1^(j) = E_1^(j) - rho_up/S_{j+1} - rho_down/S_{n-K+1}", {{"j", j}});
                                      for (int j = 1; j < n; ++j)
                                          ctx.check(central_charge_def(apply_e_bar(x, j, c)) == def, "central charge invariant under ebar_j",
                                                    {{"j", j}});
                                      for (int i = 1; i < m; ++i)
                                          ctx.check(central_charge_def(row_R(x, i)) == def, "central charge invariant under R_i", {{"i", i}});
                                      auto tx = random_trop(rng, m, n);
                                      ctx.witness["trop_x"] = to_json(tx);
                                      ctx.check(central_charge_A(tx) == central_charge_B(tx), "min-plus central charge, both formulas");
                                  }});
    });
    return plan;
}

SuitePlan plan_energy(const VerifyOptions& opts) {
    SuitePlan plan;
    for_each_size(opts, [&](int m, int n) {
        for (int t = 0; t < opts.trials; ++t)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      Rational c = rng.positive_rational();
                                      ctx.witness["x"] = to_json(x);
                                      ctx.witness["c"] = to_json(c);
                                      Rational D = energy_D(x);
                                      ctx.check(energy_product(x) == D, "D = product of Mbar path factors");
                                      ctx.check(energy_lp_product(x) == D, "D = product of sigma^(n+j-1)_{(n-1)(m-j)}");
                                      for (int j = 1; j < m; ++j) {
                                          ctx.check(energy_product_factor(x, j) == sigma_lp((n - 1) * (m - j), n + j - 1, j, m, x),
                                                    "factor j = sigma_{(n-1)(m-j)}(x_j, ..., x_m)", {{"j", j}});
                                          for (int N = 0; N <= (n - 1) * (m - j) + n; ++N)
                                              ctx.check(sigma_lp(N, n + j - 1, j, m, x) == sigma_lp_by_tau(N, n + j - 1, j, m, x),
                                                        "sigma_N = sum_d pi^d tau_{N-nd}", {{"j", j}, {"N", N}});
                                      }
                                      for (int j = 1; j < n; ++j)
                                          ctx.check(energy_D(apply_e_bar(x, j, c)) == D, "D invariant under ebar_j", {{"j", j}});
                                      for (int i = 1; i < m; ++i) ctx.check(energy_D(row_R(x, i)) == D, "D invariant under R_i", {{"i", i}});
                                      auto tx = random_trop(rng, m, n);
                                      ctx.witness["trop_x"] = to_json(tx);
                                      Trop tD = energy_D(tx);
                                      ctx.check(energy_product(tx) == tD && energy_lp_product(tx) == tD, "min-plus energy, three formulas");
                                  }});
    });
    return plan;
}

SuitePlan plan_cocharge(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("patterns of heights 2..7 at every trial; P_{k-1} checked for k <= 7");
    plan.tasks.push_back({0, 0, [](TaskContext& ctx, TrialRng&) {
                              for (int k = 2; k <= 7; ++k) {
                                  auto a = kb_patterns(k);
                                  ctx.check(static_cast<long>(a.size()) == factorial(k - 1), "|P_{k-1}| = (k-1)!", {{"k", k}});
                                  std::sort(a.begin(), a.end());
                                  a.erase(std::unique(a.begin(), a.end()), a.end());
                                  ctx.check(static_cast<long>(a.size()) == factorial(k - 1), "c-vector patterns are distinct", {{"k", k}});
                                  ctx.check(a == kb_patterns_bruteforce(k), "c-vector patterns = exhaustive search", {{"k", k}});
                              }
                          }});
    for (int t = 0; t < opts.trials; ++t)
        for (int h = 2; h <= 7; ++h)
            plan.tasks.push_back({h, h, [h](TaskContext& ctx, TrialRng& rng) {
                                      auto z = random_pattern<Rational>(h, [&] { return rng.positive_rational(); });
                                      auto tz = random_pattern<Trop>(h, [&] { return Trop(rng.uniform(-4, 4)); });
                                      ctx.witness["z"] = to_json(z);
                                      ctx.witness["trop_z"] = to_json(tz);
                                      Rational prod = 1;
                                      Trop tprod(0);
                                      for (int k = 2; k <= h; ++k) {
                                          Rational kb = kb_sigma(z, k);
                                          ctx.check(sigma_k(z, k) == kb, "sigma_k = beta^{k-2} z_kk sum_P wt", {{"k", k}});
                                          ctx.check(sigma_k(tz, k) == kb_sigma(tz, k), "min-plus sigma_k = KB sum", {{"k", k}});
                                          prod *= kb;
                                          tprod = tprod * kb_sigma(tz, k);
                                      }
                                      ctx.check(geometric_cocharge(z) == prod, "c_m = product of KB sums");
                                      ctx.check(geometric_cocharge(tz) == tprod, "min-plus c_m = product of KB sums");
                                  }});
    return plan;
}

SuitePlan plan_tropical(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("integer entries in [0, 4]; sizes uniform in [1, m] x [1, n]; " + std::to_string(8 * opts.trials) +
                         " RSK matrices, " + std::to_string(4 * opts.trials) + " tableaux, " + std::to_string(4 * opts.trials) +
                         " Burge matrices");
    auto sample = [opts](TaskContext& ctx, TrialRng& rng) {
        const int m = static_cast<int>(rng.uniform(1, opts.m));
        const int n = static_cast<int>(rng.uniform(1, opts.n));
        IntMatrix a = rng.int_matrix(m, n, 4);
        ctx.witness["m"] = m;
        ctx.witness["n"] = n;
        ctx.witness["a"] = to_json(a);
        return a;
    };
    for (int t = 0; t < 8 * opts.trials; ++t)
        plan.tasks.push_back({opts.m, opts.n, [sample](TaskContext& ctx, TrialRng& rng) {
                                  IntMatrix a = sample(ctx, rng);
                                  const int m = a.rows(), n = a.cols();
                                  auto pq = rsk(a);
                                  auto tg = trop_grsk(a);
                                  ctx.check(tg.first == gt_of_tableau(pq.P, n, m), "Trop(gRSK) P = GT pattern of the RSK insertion tableau",
                                            {{"P", tableau_str(pq.P)}});
                                  ctx.check(tg.second == gt_of_tableau(pq.Q, m, n), "Trop(gRSK) Q = GT pattern of the RSK recording tableau",
                                            {{"Q", tableau_str(pq.Q)}});
                                  ctx.check(tableau_of_gt(tg.first) == pq.P, "tableau of the pattern = P");
                                  ctx.check(burge(a).P == pq.P, "Burge insertion tableau = RSK insertion tableau");
                                  ctx.check(trop_energy(a) == trop_energy_product(a), "Trop(D) by tableaux = by path families");
                              }});
    for (int t = 0; t < 4 * opts.trials; ++t)
        plan.tasks.push_back({opts.m, opts.n, [sample](TaskContext& ctx, TrialRng& rng) {
                                  IntMatrix a = sort_rows_by_sum(sample(ctx, rng), false);
                                  Tableau Q = rsk(a).Q;
                                  ctx.witness["tableau"] = to_json(Q);
                                  auto g = gt_of_tableau(Q, a.rows(), a.cols());
                                  long cc = cocharge(Q);
                                  ctx.check(trop_cocharge(g) == cc, "Trop(c_m)(GT(Q)) = cocharge(Q)", {{"cocharge", cc}});
                                  ctx.check(trop_cocharge_kb(g) == cc, "Trop of the KB form = cocharge(Q)", {{"cocharge", cc}});
                              }});
    for (int t = 0; t < 4 * opts.trials; ++t)
        plan.tasks.push_back({opts.m, opts.n, [sample](TaskContext& ctx, TrialRng& rng) {
                                  IntMatrix a = sort_rows_by_sum(sample(ctx, rng), true);
                                  ctx.witness["a"] = to_json(a);
                                  Tableau Q = burge(a).Q;
                                  ctx.witness["burge_Q"] = to_json(Q);
                                  ctx.check(trop_energy(a) == cocharge(Q), "Trop(D)(a) = cocharge of the Burge recording tableau");
                              }});
    return plan;
}

}  // namespace lsym::detail
