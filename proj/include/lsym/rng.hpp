/**
 * @file rng.hpp
 * @brief Deterministic sampling of test points.
 *
 * Each trial owns a generator seeded from (master seed, trial index), so
 * results do not depend on scheduling or on how many trials ran before.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lsym/matrix.hpp"

namespace lsym {

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), 0x6c73u};
        gen_.seed(seq);
    }

    /** Uniform integer in [lo, hi]. */
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    /** p/q with p, q uniform in [1, 20]. */
    Rational positive_rational() {
        Rational q(uniform(1, 20), uniform(1, 20));
        q.canonicalize();
        return q;
    }

    Matrix<Rational> positive_matrix(int m, int n) {
        Matrix<Rational> x(m, n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) x(i, j) = positive_rational();
        return x;
    }

    Matrix<long> int_matrix(int m, int n, long max_entry) {
        Matrix<long> a(m, n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) a(i, j) = uniform(0, max_entry);
        return a;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace lsym
