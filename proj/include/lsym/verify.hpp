/**
 * @file verify.hpp
 * @brief Property suites that check every identity of the library by two
 *        independent computations, with reproducible seeds and JSON reports.
 *
 * A suite expands into a deterministic list of tasks (one per point, shape
 * or corpus entry). Tasks run on a worker pool; each owns a generator keyed
 * by (seed, suite, m, n, task index), and results are merged in task order,
 * so the report does not depend on scheduling.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lsym {

struct VerifyOptions {
    int m = 4;               // upper bound on the number of rows
    int n = 4;               // upper bound on the number of columns
    int trials = 25;         // random points per (m, n), or the base count of random objects
    std::uint64_t seed = 0;
    int threads = 0;         // 0 picks the hardware concurrency
};

struct VerifyFailure {
    long task = 0;
    std::string check;
    nlohmann::json witness;
};

struct VerifyReport {
    std::string suite;
    VerifyOptions opts;
    long tasks = 0;
    long checks = 0;
    long excluded = 0;
    long failure_count = 0;
    std::vector<VerifyFailure> failures;  // the first failures, in task order
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    bool passed() const { return failure_count == 0 && checks > 0; }
    /** The report as JSON; the elapsed time is left out unless requested. */
    nlohmann::json to_json(bool include_time = true) const;
};

/** The suite names accepted by run_suite, in a fixed order. */
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/** Runs one suite; throws lsym::Error("bad-input") for an unknown name. */
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace lsym
