/**
 * @file acceptance.cpp
 * @brief Acceptance driver: runs the identity suites at the full bounds
 *        (m, n <= 4, 25 points, seed 0) and prints one line per criterion.
 */
#include <iostream>
#include <string>
#include <vector>

#include "lsym/verify.hpp"

namespace {

struct Criterion {
    int id;
    std::string what;
    std::vector<std::string> suites;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Jacobi-Trudi for every skew shape in a 3x4 box, all colors, m,n in {2,3,4}, as polynomials", {"jacobi-trudi"}},
        {2, "crystal axioms, braid relations and bicrystal commutation at 25 points per (m,n) <= (4,4)", {"crystal-axioms"}},
        {3, "R = Weyl reflection, R involutive, E invariant under R", {"r-matrix"}},
        {4, "gRSK symmetry, row vs column formulas, intertwining, shape", {"grsk"}},
        {5, "pseudo-energies invariant under ebar on the corner corpus, 5 values of c per operator", {"pseudo-energy"}},
        {6, "determinantal formula and M~' = U M~ V on the corner corpus, plus the m=5, n=3 determinant", {"det-formula"}},
        {7, "unfolded sum of minors for d <= 2, m,n <= 4, with the three-way Q identities", {"sum-of-minors"}},
        {8, "cylindric Jacobi-Trudi parts 1 and 2 (<= 10 cells) and the folded identities", {"cylindric", "folded"}},
        {9, "decoration, central charge and the two decomposition lemmas", {"decoration", "central-charge"}},
        {10, "energy three ways", {"energy"}},
        {11, "sigma_k = Kirillov-Berenstein sum and |P_{k-1}| = (k-1)! for k <= 7", {"cocharge"}},
        {12, "min-plus: 200 gRSK matrices, 100 cocharge tableaux, 100 Burge energy matrices", {"tropical"}},
        {13, "worked-example regression", {"paper-examples"}},
    };

    lsym::VerifyOptions opts;
    opts.m = 4;
    opts.n = 4;
    opts.trials = 25;
    opts.seed = 0;

    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        long checks = 0, failures = 0, excluded = 0;
        double ms = 0;
        std::string first_failure;
        for (const auto& name : c.suites) {
            lsym::VerifyReport rep = lsym::run_suite(name, opts);
            ok = ok && rep.passed();
            checks += rep.checks;
            failures += rep.failure_count;
            excluded += rep.excluded;
            ms += rep.elapsed_ms;
            if (first_failure.empty() && !rep.failures.empty())
                first_failure = name + ": " + rep.failures.front().check + " " + rep.failures.front().witness.dump();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.what << " (" << checks << " checks, "
                  << failures << " failures";
        if (excluded > 0) std::cout << ", " << excluded << " parameter tuples outside the admissible range skipped";
        std::cout << ", " << static_cast<long>(ms) << " ms)\n";
        if (!ok) {
            ++failed;
            if (!first_failure.empty()) std::cout << "       first failure: " << first_failure << "\n";
        }
    }
    std::cout << (failed == 0 ? "all 13 criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
