#pragma once

#include <string>
#include <vector>

#include "divitopos/lattice.hpp"

namespace divitopos {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The full verification battery: each suite exercises one family of
/// exhaustively checkable claims at its pinned parameters. All arithmetic is
/// exact, so there are no tolerances anywhere.
std::vector<SuiteResult> run_verification_suites();

/// Per-modulus invariant battery for one lattice (order laws, lattice laws,
/// heyting laws, topology axioms).
std::vector<SuiteResult> run_module_invariants(Div modulus);

bool all_pass(const std::vector<SuiteResult>& results);
std::string suites_to_json(const std::vector<SuiteResult>& results);

}  // namespace divitopos
