/**
 * @file verify_internal.hpp
 * @brief Task and context types shared by the suite definitions.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lsym/comb.hpp"
#include "lsym/rng.hpp"
#include "lsym/verify.hpp"

namespace lsym::detail {

/** Per-task accumulator; the witness collects the inputs of the current task. */
struct TaskContext {
    long index = 0;
    long checks = 0;
    long excluded = 0;
    long failure_count = 0;
    std::vector<VerifyFailure> failures;
    nlohmann::json witness = nlohmann::json::object();

    /** Records one check; on failure the current witness plus `extra` is kept. */
    bool check(bool ok, const std::string& name, const nlohmann::json& extra = nullptr) {
        ++checks;
        if (ok) return true;
        ++failure_count;
        if (failures.size() < 5) {
            nlohmann::json w = witness;
            if (!extra.is_null()) w["detail"] = extra;
            failures.push_back({index, name, std::move(w)});
        }
        return false;
    }
};

struct Task {
    int m = 0;
    int n = 0;
    std::function<void(TaskContext&, TrialRng&)> run;
};

struct SuitePlan {
    std::vector<Task> tasks;
    std::vector<std::string> notes;
};

inline nlohmann::json to_json(const Rational& q) { return to_string(q); }
inline nlohmann::json to_json(const Trop& t) { return t.inf ? nlohmann::json("inf") : nlohmann::json(t.v); }
inline nlohmann::json to_json(long v) { return v; }

template <class T>
nlohmann::json to_json(const Matrix<T>& A) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= A.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= A.cols(); ++j) row.push_back(to_json(A(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
nlohmann::json to_json(const GTPattern<T>& z) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= z.p(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = i; j <= z.n; ++j) row.push_back(to_json(z(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json to_json(const Tableau& T) { return nlohmann::json(T); }

/** A random m x n min-plus point with integer entries in [lo, hi]. */
inline Matrix<Trop> random_trop(TrialRng& rng, int m, int n, long lo = 0, long hi = 4) {
    Matrix<Trop> t(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) t(i, j) = Trop(rng.uniform(lo, hi));
    return t;
}

/** Calls f(m, n) for every 1 <= m <= opts.m, 1 <= n <= opts.n (with optional lower bounds). */
template <class F>
void for_each_size(const VerifyOptions& opts, F f, int m_lo = 1, int n_lo = 1) {
    for (int m = m_lo; m <= opts.m; ++m)
        for (int n = n_lo; n <= opts.n; ++n) f(m, n);
}

/** Random points per (m, n) for the corpus suites, which already sweep many shapes per point. */
inline int corpus_points(const VerifyOptions& opts) { return std::max(1, opts.trials / 25); }

SuitePlan plan_crystal_axioms(const VerifyOptions& opts);
SuitePlan plan_r_matrix(const VerifyOptions& opts);
SuitePlan plan_grsk(const VerifyOptions& opts);
SuitePlan plan_jacobi_trudi(const VerifyOptions& opts);
SuitePlan plan_pseudo_energy(const VerifyOptions& opts);
SuitePlan plan_det_formula(const VerifyOptions& opts);
SuitePlan plan_sum_of_minors(const VerifyOptions& opts);
SuitePlan plan_cylindric(const VerifyOptions& opts);
SuitePlan plan_folded(const VerifyOptions& opts);
SuitePlan plan_decoration(const VerifyOptions& opts);
SuitePlan plan_central_charge(const VerifyOptions& opts);
SuitePlan plan_energy(const VerifyOptions& opts);
SuitePlan plan_cocharge(const VerifyOptions& opts);
SuitePlan plan_tropical(const VerifyOptions& opts);
SuitePlan plan_paper_examples(const VerifyOptions& opts);

}  // namespace lsym::detail
