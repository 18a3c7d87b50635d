#pragma once

// Verification suites behind the CLI: each check records what was measured
// against which bound, with the identity under test spelled out.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace maslovlab {

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    double measured = 0;
    double tolerance = 0;
    std::string citation;  // the identity or count being checked
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    nlohmann::json to_json() const;
    std::string summary() const;
};

// Golden values and identities of the model action on C^2: Hessian data,
// the moment/primitive identities, gradient-flow asymptotics, invariant
// plane classification, and the basic Maslov indices. dt is the RK4 step
// used by the flow checks.
SuiteReport run_example22_suite(std::uint64_t seed, double dt = 1e-3);

// W_n checks for n = 0..n_max: fixed points, action invariance, sphere
// samples (residual, moment map, Lagrangian tangency, adjacency), and the
// reduced-surface profile.
SuiteReport run_wn_suite(std::uint64_t seed, int n_max = 5, int resolution = 64);

// Integer consistency grid over profiles plus the two framing windings.
SuiteReport run_topology_suite(std::uint64_t seed);

SuiteReport run_all_suites(std::uint64_t seed);

}  // namespace maslovlab
