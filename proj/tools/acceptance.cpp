// Acceptance run: one PASS/FAIL line per criterion.  Every comparison is
// exact (tolerance 0); the per-criterion time budgets below are fixed.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "arches/verify.hpp"

using namespace arches;
using namespace arches::verify;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
    int id;
    const char* what;
    std::vector<Group> groups;
    double budget_seconds;
};

struct Outcome {
    Report report;
    double seconds = 0;
    std::string error;
};

Outcome run(const Criterion& c, const Bounds& bounds) {
    Outcome out;
    out.report.suite = "criterion-" + std::to_string(c.id);
    out.report.seed = kSeed;
    const auto t0 = std::chrono::steady_clock::now();
    const Budget budget(c.budget_seconds);
    try {
        for (const auto& g : c.groups) out.report.append(g(bounds, kSeed, budget));
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const Bounds bounds; // n <= 5, hexagons <= 3 (counts and homogeneous <= 4), 10 draws
    const std::vector<Criterion> criteria{
        {1, "stochastic transfer matrix, simple eigenvalue 1 independent of t", {group_stochastic, group_eigen}, 60},
        {2, "ground state degrees (n <= 4)", {group_degrees}, 120},
        {3, "factorization and wheel reduction", {group_factorization, group_wheel}, 120},
        {4, "Phi: subset = determinant = LGV = tilings", {group_phi_cross}, 60},
        {5, "recurrence with a stable sign", {group_recurrence}, 30},
        {6, "nested components against the kernel", {group_ratio}, 180},
        {7, "Schur specialization and homogeneous value", {group_schur, group_homogeneous}, 60},
        {8, "tiling counts and path bijection", {group_tiling}, 120},
        {9, "homogeneous census equals FPL counts", {group_rs}, 180},
        {10, "symmetry apparatus", {group_swap}, 60},
        {11, "four little arches", {group_four_arch}, 300},
    };

    // sequential, so each time is that criterion's own
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o = run(c, bounds);
        const bool in_time = o.seconds <= c.budget_seconds;
        const bool ok = o.error.empty() && o.report.ok() && !o.report.cases.empty() && in_time;
        all = all && ok;
        std::cout << "criterion " << std::setw(2) << c.id << (ok ? "  PASS  " : "  FAIL  ") << c.what << "  [" << (o.report.cases.size() - o.report.failures())
                  << "/" << o.report.cases.size() << " cases, exact, " << std::fixed << std::setprecision(1) << o.seconds << " s of " << c.budget_seconds
                  << " s]";
        if (!o.error.empty()) std::cout << "  error: " << o.error;
        if (!in_time) std::cout << "  over budget";
        std::cout << '\n';
        for (const auto& cs : o.report.cases)
            if (!cs.pass || verbose) std::cout << "    " << (cs.pass ? "ok   " : "FAIL ") << cs.id << "  expected " << cs.expected << "  actual " << cs.actual << '\n';
    }
    std::cout << (all ? "all criteria pass" : "some criteria fail") << '\n';
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
