/**
 * @file suites_schur.cpp
 * @brief Suites for loop Schur functions: Jacobi-Trudi, pseudo-energies, the
 *        determinant formula with M~', the unfolded sum of minors, and the
 *        cylindric and folded identities.
 */
#include <memory>

#include "lsym/cylindric.hpp"
#include "lsym/unfolded.hpp"
#include "verify_internal.hpp"

namespace lsym::detail {

namespace {

nlohmann::json shape_json(const ColoredSkewShape& s) {
    return {{"lambda", s.lambda.parts}, {"mu", s.mu.parts}, {"r", s.r}};
}

nlohmann::json cyl_json(const CylShape& s) {
    return {{"lambda", s.lambda.parts}, {"mu", s.mu.parts}, {"k", s.k}, {"r", s.r}};
}

/** Shapes of the 3 x 4 box corpus that are pseudo-energies for m after removing empty columns. */
std::vector<ColoredSkewShape> corner_corpus(int m, int n) {
    std::vector<ColoredSkewShape> out;
    for (const auto& s : skew_corpus(3, 4, n))
        if (corner_color_ok(normalize_empty_columns(s), m)) out.push_back(s);
    return out;
}

}  // namespace

SuitePlan plan_jacobi_trudi(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("every skew shape in the 3 x 4 box and every color; symbolic polynomial equality");
    for_each_size(opts, [&](int m, int n) {
        auto X = std::make_shared<Matrix<Poly>>(symbolic_point(m, n));
        auto Mt = std::make_shared<PeriodicMatrix<Poly>>(build_Mtilde(*X));
        for (const auto& s : skew_corpus(3, 4, n))
            plan.tasks.push_back({m, n, [s, X, Mt](TaskContext& ctx, TrialRng& rng) {
                                      ctx.witness["shape"] = shape_json(s);
                                      Poly v = ssyt_sum(s, *X);
                                      ctx.check(jacobi_trudi(s, *X) == v, "Jacobi-Trudi determinant = tableau sum");
                                      auto ms = maya_sets(s, X->rows());
                                      ctx.check(periodic_minor(*Mt, ms.I, ms.J) == v, "minor of M~ on the Maya sets = tableau sum");
                                      ctx.check(ssyt_sum(normalize_empty_columns(s), *X) == v,
                                                "removing empty columns keeps the colored tableau sum");
                                      if (s.size() <= 8)
                                          ctx.check(ssyt_sum_enumerated(s, *X) == v, "column transfer sum = explicit enumeration");
                                      auto t = random_trop(rng, X->rows(), X->cols());
                                      ctx.witness["trop_x"] = to_json(t);
                                      ctx.check(ssyt_sum(s, t) == ssyt_sum_enumerated(s, t), "min-plus tableau sums agree");
                                  }});
    });
    return plan;
}

SuitePlan plan_pseudo_energy(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("corner-color shapes of the 3 x 4 box corpus; 5 random c per operator ebar_j");
    for_each_size(opts, [&](int m, int n) {
        for (const auto& s : corner_corpus(m, n))
            plan.tasks.push_back({m, n, [m, n, s](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      ctx.witness["shape"] = shape_json(s);
                                      ctx.witness["x"] = to_json(x);
                                      Rational v = ssyt_sum(s, x);
                                      auto tx = random_trop(rng, m, n, -4, 4);
                                      Trop tv = ssyt_sum(s, tx);
                                      ctx.witness["trop_x"] = to_json(tx);
                                      for (int j = 1; j < n; ++j)
                                          for (int rep = 0; rep < 5; ++rep) {
                                              Rational c = rng.positive_rational();
                                              ctx.check(ssyt_sum(s, apply_e_bar(x, j, c)) == v, "s(ebar_j^c x) = s(x)",
                                                        {{"j", j}, {"c", to_string(c)}});
                                              Trop tc(rng.uniform(-3, 3));
                                              ctx.check(ssyt_sum(s, apply_e_bar(tx, j, tc)) == tv, "min-plus s(ebar_j^c x) = s(x)",
                                                        {{"j", j}, {"c", tc.v}});
                                          }
                                      if (n == 1) ctx.check(true, "no barred operators for n = 1");
                                  }});
    });
    return plan;
}

SuitePlan plan_det_formula(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("corner-color shapes of the 3 x 4 box corpus at each point; M~' = U M~ V blockwise");
    for_each_size(opts, [&](int m, int n) {
        for (int p = 0; p < corpus_points(opts); ++p)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      ctx.witness["x"] = to_json(x);
                                      auto Mt = build_Mtilde(x);
                                      auto Mp = build_Mtilde_prime(x);
                                      for (const auto& s : corner_corpus(m, n))
                                          ctx.check(theorem_det_formula(s, m, Mp) == ssyt_sum(s, x),
                                                    "Delta_{I,J}(M~') = pseudo-energy", shape_json(s));
                                      Matrix<Rational> N = build_M(x);
                                      ctx.check(N == Mt.blocks[0], "block 0 of M~ = M(x_1, ..., x_m)");
                                      auto uv = build_UV(N, m);
                                      ctx.check(uv.U * N * uv.V == expected_UNV(N, m), "U M V = M'");
                                      for (int d = 0; d <= Mt.depth(); ++d)
                                          ctx.check(uv.U * Mt.blocks[d] * uv.V == Mp.blocks[d], "U M~_d V = M~'_d", {{"d", d}});
                                      for (int k = 1; k <= n + 1; ++k)
                                          ctx.check(shape_invariant(x, k) == shape_invariant_minor(x, k),
                                                    "S_k tableau sum = bottom-left minor of M", {{"k", k}});
                                      for (int i = 1; i < m; ++i)
                                          for (int j = 1; j <= n && i + j <= m; ++j) {
                                              ctx.check(q_invariant(x, i, j) == q_invariant_minor(x, i, j),
                                                        "Q_i^(j) tableau sum = Maya minor of M~", {{"i", i}, {"j", j}});
                                              ctx.check(corner_color_ok(q_shape(i, j, m, n).shape, m),
                                                        "Q_i^(j) shape satisfies the corner color condition", {{"i", i}, {"j", j}});
                                          }
                                  }});
    });
    plan.tasks.push_back({5, 3, [](TaskContext& ctx, TrialRng& rng) {
                              auto x = rng.positive_matrix(5, 3);
                              ctx.witness["x"] = to_json(x);
                              auto F = fold(build_Mtilde_prime(x));
                              auto D = det(F);
                              std::vector<Rational> pi;
                              for (int i = 1; i <= 5; ++i) pi.push_back(x(i, 1) * x(i, 2) * x(i, 3));
                              auto e = [&](int k) {
                                  Rational s = 0;
                                  for (const auto& S : combinations(interval(1, 5), k)) {
                                      Rational p = 1;
                                      for (int v : S) p *= pi[v - 1];
                                      s += p;
                                  }
                                  return s;
                              };
                              for (int d = 0; d <= 5; ++d)
                                  ctx.check(D.coeff(d) == e(5 - d), "m=5, n=3: [t^d] det M^'(t) = e_{5-d}(pi)", {{"d", d}});
                              auto S = [&](int k) { return shape_invariant(x, k); };
                              auto rQ = [&](int i, int j) { return reduced_q_invariant(x, i, j); };
                              ctx.check(e(4) == S(2) * rQ(4, 1) - S(1) * S(3) / S(2) * rQ(2, 2) + S(1) / S(3),
                                        "m=5, n=3: e_4(pi) in shape and reduced Q-invariants");
                          }});
    return plan;
}

SuitePlan plan_sum_of_minors(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back(
        "parameter tuples with d <= 2 and max(0, n-m) <= a_k, b_k <= n; tuples outside the hypothesis "
        "(n - a_k) + (n - b_{k-1}) <= m with J_t <= I_t <= J_t + m - 1 are counted as excluded");
    for_each_size(opts, [&](int m, int n) {
        for (int p = 0; p < corpus_points(opts); ++p)
            for (int d = 0; d <= 2; ++d)
                plan.tasks.push_back({m, n, [m, n, d](TaskContext& ctx, TrialRng& rng) {
                                          auto x = rng.positive_matrix(m, n);
                                          auto tx = random_trop(rng, m, n);
                                          ctx.witness["x"] = to_json(x);
                                          ctx.witness["trop_x"] = to_json(tx);
                                          for (const auto& bp : band_corpus(m, n, d)) {
                                              if (!band_params_admissible(bp, m, n)) {
                                                  ++ctx.excluded;
                                                  continue;
                                              }
                                              nlohmann::json w = {{"a", bp.a}, {"b", bp.b}};
                                              auto s = band_index_sets(bp, n);
                                              Rational lhs = unfolded_lhs(x, bp);
                                              ctx.check(lhs == unfolded_sum_of_minors(x, bp), "Delta_{I,J}(M~) = sum of products of Mbar minors", w);
                                              ctx.check(lhs == highway_minor(x, s.I, s.J), "determinant = highway families", w);
                                              ctx.check(highway_minor(tx, s.I, s.J) == unfolded_sum_of_minors(tx, bp),
                                                        "min-plus highway families = underway products", w);
                                          }
                                      }});
    });
    plan.tasks.push_back({3, 3, [](TaskContext& ctx, TrialRng& rng) {
                              auto x = rng.positive_matrix(3, 3);
                              ctx.witness["x"] = to_json(x);
                              auto Mt = build_Mtilde(x);
                              auto Mb = build_Mbar(x);
                              auto D = [&](const IndexSet& I, const IndexSet& J) { return minor(Mb, I, J); };
                              Rational q11 = q_invariant(x, 1, 1), q12 = q_invariant(x, 1, 2), q21 = q_invariant(x, 2, 1);
                              ctx.check(q11 == periodic_minor(Mt, {3, 4, 5, 6}, {1, 2, 4, 5}) &&
                                            q11 == D({3}, {1}) * D({1, 3}, {1, 2}) + D({3}, {2}) * D({2, 3}, {1, 2}) &&
                                            q11 == unfolded_sum_of_minors(x, BandParams{{1, 3}, {2, 2}}),
                                        "m=n=3: Q_1^(1) three ways");
                              ctx.check(q12 == periodic_minor(Mt, {2, 3, 5, 6}, {1, 2, 3, 4}) &&
                                            q12 == D({2, 3}, {1, 2}) * D({2}, {1}) + D({2, 3}, {1, 3}) * D({3}, {1}) &&
                                            q12 == unfolded_sum_of_minors(x, BandParams{{2, 2}, {3, 1}}),
                                        "m=n=3: Q_1^(2) three ways");
                              Rational sum = 0;
                              for (const auto& X : combinations(interval(1, 3), 2)) sum += D({2, 3}, X) * D(X, {1, 2});
                              ctx.check(q21 == periodic_minor(Mt, {2, 3, 4, 5, 6}, {1, 2, 3, 4, 5}) && q21 == sum &&
                                            q21 == unfolded_sum_of_minors(x, BandParams{{2, 3}, {3, 2}}),
                                        "m=n=3: Q_2^(1) three ways");
                          }});
    return plan;
}

SuitePlan plan_cylindric(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("k-cylindric lambda/mu with at most m + n rows and at most 10 cells, every color; all k-subsets I, J of [n]");
    for_each_size(opts, [&](int m, int n) {
        for (int p = 0; p < corpus_points(opts); ++p)
            for (int k = 1; k <= n; ++k)
                plan.tasks.push_back({m, n, [m, n, k](TaskContext& ctx, TrialRng& rng) {
                                          auto x = rng.positive_matrix(m, n);
                                          auto tx = random_trop(rng, m, n);
                                          ctx.witness["x"] = to_json(x);
                                          ctx.witness["trop_x"] = to_json(tx);
                                          ctx.witness["k"] = k;
                                          auto Mh = folded_M(x);
                                          std::vector<Partition> cyl;
                                          for (const auto& lam : partitions_in_box(m + n, k))
                                              if (is_k_cylindric(lam, k, n)) cyl.push_back(lam);
                                          for (const auto& lam : cyl)
                                              for (const auto& mu : cyl) {
                                                  if (!lam.contains(mu) || lam.size() - mu.size() > 10) continue;
                                                  for (int r = 1; r <= n; ++r) {
                                                      CylShape s(lam, mu, k, r, n);
                                                      Rational cs = cyl_schur(s, x);
                                                      ctx.check(cs == cyl_jt_part1(s, Mh, m), "cs = signed coefficient of a folded minor",
                                                                cyl_json(s));
                                                      ctx.check(d_max(s) == shortest_diagonal(s), "d_max = shortest diagonal",
                                                                cyl_json(s));
                                                      if (auto comp = cyl_component(s))
                                                          ctx.check(ssyt_sum(*comp, x) == cs,
                                                                    "a shape with an empty column is an ordinary loop skew Schur function",
                                                                    cyl_json(s));
                                                  }
                                              }
                                          for (const auto& I : combinations(interval(1, n), k))
                                              for (const auto& J : combinations(interval(1, n), k)) {
                                                  nlohmann::json w = {{"I", I}, {"J", J}};
                                                  TPoly<Rational> lhs = minor(Mh, I, J);
                                                  ctx.check(lhs == cyl_jt_part2_rhs(I, J, x), "Delta_{I,J}(M^(t)) = sum_d ((-1)^{k-1} t)^d cs_{R^d}", w);
                                                  Partition lam = lambda_of_J(J, m), mu = mu_of_I(I);
                                                  const int top = std::max(lhs.degree(), 0) + 1;
                                                  auto fam = cyl_family_sums(x, I, J, top);
                                                  auto tfam = cyl_family_sums(tx, I, J, top);
                                                  for (int d = 0; d <= top; ++d) {
                                                      std::optional<CylShape> s;
                                                      if (lam.contains(mu)) s = border_strip_iterate(CylShape(lam, mu, k, k, n), d);
                                                      Rational cs = s ? cyl_schur(*s, x) : Rational(0);
                                                      Trop tcs = s ? cyl_schur(*s, tx) : Trop::infinity();
                                                      w["d"] = d;
                                                      ctx.check(fam[d] == cs, "cylinder families of winding d = cs_{R^d}", w);
                                                      ctx.check(tfam[d] == tcs, "min-plus cylinder families of winding d = cs_{R^d}", w);
                                                  }
                                              }
                                      }});
    });
    return plan;
}

SuitePlan plan_folded(const VerifyOptions& opts) {
    SuitePlan plan;
    plan.notes.push_back("bottom-left folded minors of M^(t) and of the folded M~'; sum of Mbar minors for all 1 <= a <= b <= m");
    for_each_size(opts, [&](int m, int n) {
        for (int p = 0; p < corpus_points(opts); ++p)
            plan.tasks.push_back({m, n, [m, n](TaskContext& ctx, TrialRng& rng) {
                                      auto x = rng.positive_matrix(m, n);
                                      ctx.witness["x"] = to_json(x);
                                      auto Mh = folded_M(x);
                                      auto Mp = fold(build_Mtilde_prime(x));
                                      Matrix<Rational> M0 = build_M(x);
                                      bool const_term = true;
                                      for (int a = 1; a <= n; ++a)
                                          for (int b = 1; b <= n; ++b) const_term = const_term && Mh(a, b).coeff(0) == M0(a, b);
                                      ctx.check(const_term, "M^(0) = M(x_1, ..., x_m)");
                                      for (int i = 1; i <= std::min(m, n) + 1 && i <= n; ++i) {
                                          auto rhs = bottom_left_folded_rhs(i, x);
                                          ctx.check(minor(Mh, interval(i, n), interval(1, n - i + 1)) == rhs,
                                                    "bottom-left minor of M^(t) = signed sum of cs_{R^d(nu^i)}", {{"i", i}});
                                          ctx.check(minor(Mp, interval(i, n), interval(1, n - i + 1)) == rhs,
                                                    "bottom-left minor of folded M~' = the same sum", {{"i", i}});
                                      }
                                      auto Mb = build_Mbar(x);
                                      for (int a = 1; a <= m; ++a)
                                          for (int b = a; b <= m; ++b)
                                              for (int i = 1; i <= std::min(m, n); ++i)
                                                  for (int d = 0; b - a - 2 * i + 3 - d >= 0; ++d)
                                                      ctx.check(folded_sum_of_minors(Mb, i, a, b, d) == folded_cs_ab(x, i, a, b, d),
                                                                "sum of Mbar minors = cs^(n+a-1)_{R^d} on rows a..b",
                                                                {{"i", i}, {"a", a}, {"b", b}, {"d", d}});
                                  }});
    });
    return plan;
}

}  // namespace lsym::detail
