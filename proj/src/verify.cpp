/**
 * @file verify.cpp
 * @brief Suite registry, the worker pool and report serialization.
 */
#include "lsym/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "verify_internal.hpp"

namespace lsym {

namespace {

using detail::SuitePlan;
using PlanFn = SuitePlan (*)(const VerifyOptions&);

struct SuiteEntry {
    const char* name;
    PlanFn plan;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> r = {
        {"crystal-axioms", detail::plan_crystal_axioms},
        {"r-matrix", detail::plan_r_matrix},
        {"grsk", detail::plan_grsk},
        {"jacobi-trudi", detail::plan_jacobi_trudi},
        {"pseudo-energy", detail::plan_pseudo_energy},
        {"det-formula", detail::plan_det_formula},
        {"sum-of-minors", detail::plan_sum_of_minors},
        {"cylindric", detail::plan_cylindric},
        {"folded", detail::plan_folded},
        {"decoration", detail::plan_decoration},
        {"central-charge", detail::plan_central_charge},
        {"energy", detail::plan_energy},
        {"cocharge", detail::plan_cocharge},
        {"tropical", detail::plan_tropical},
        {"paper-examples", detail::plan_paper_examples},
    };
    return r;
}

std::uint64_t suite_id(const std::string& name) {
    const auto& r = registry();
    for (std::size_t k = 0; k < r.size(); ++k)
        if (name == r[k].name) return k + 1;
    return 0;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.push_back(e.name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) { return suite_id(name) != 0; }

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    const std::uint64_t id = suite_id(name);
    if (id == 0) fail("bad-input", "unknown suite '" + name + "'");
    if (opts.m < 1 || opts.n < 1 || opts.m > 8 || opts.n > 8) fail("bad-input", "bounds m, n must lie in [1, 8]");
    if (opts.trials < 1) fail("bad-input", "trials must be positive");

    const auto start = std::chrono::steady_clock::now();
    SuitePlan plan = registry()[id - 1].plan(opts);
    std::vector<detail::TaskContext> results(plan.tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < plan.tasks.size(); k = next++) {
            detail::TaskContext& ctx = results[k];
            const detail::Task& task = plan.tasks[k];
            ctx.index = static_cast<long>(k);
            ctx.witness["m"] = task.m;
            ctx.witness["n"] = task.n;
            ctx.witness["task"] = static_cast<long>(k);
            TrialRng rng(opts.seed, id * 1000000000ull + k);
            try {
                task.run(ctx, rng);
            } catch (const Error& e) {
                ctx.check(false, "exception", std::string(e.what()));
            } catch (const std::exception& e) {
                ctx.check(false, "exception", std::string(e.what()));
            }
        }
    };
    unsigned nthreads = opts.threads > 0 ? static_cast<unsigned>(opts.threads) : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, static_cast<unsigned>(plan.tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    VerifyReport rep;
    rep.suite = name;
    rep.opts = opts;
    rep.tasks = static_cast<long>(plan.tasks.size());
    rep.notes = std::move(plan.notes);
    for (auto& ctx : results) {
        rep.checks += ctx.checks;
        rep.excluded += ctx.excluded;
        rep.failure_count += ctx.failure_count;
        for (auto& f : ctx.failures)
            if (rep.failures.size() < 50) rep.failures.push_back(std::move(f));
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

nlohmann::json VerifyReport::to_json(bool include_time) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["seed"] = opts.seed;
    j["parameters"] = {{"m", opts.m}, {"n", opts.n}, {"trials", opts.trials}};
    j["tasks"] = tasks;
    j["checks"] = checks;
    j["excluded"] = excluded;
    j["failure_count"] = failure_count;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) fs.push_back({{"task", f.task}, {"check", f.check}, {"witness", f.witness}});
    j["failures"] = std::move(fs);
    j["notes"] = notes;
    j["passed"] = passed();
    if (include_time) j["elapsed_ms"] = static_cast<long>(elapsed_ms);
    return j;
}

}  // namespace lsym
