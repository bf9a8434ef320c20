#pragma once

#include <tlab/tableau.hpp>

#include <string>
#include <utility>
#include <vector>

namespace tlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& results);

// Distribution of the stabilization statistic over S_1..S_max_n, checked
// against the reference triangle, the closed form for the count of words
// stabilizing at 2, and a direct enumeration cross-check.
std::vector<CheckResult> verify_stab_distribution(int max_n, int jobs);

// stab(S) <= rows(S) for every standard skew tableau with weakly decreasing
// row vector and at most max_size cells. Any violation is reported with the
// offending tableau.
std::vector<CheckResult> verify_conjecture(int max_size, int jobs);

// Root-of-unity evaluations of the q-hook-length polynomial of (a^b) against
// brute-force counts of promotion-power fixed points, for all k in [0, a*b).
std::vector<CheckResult> verify_csp(const std::vector<std::pair<int, int>>& shapes);

// Completeness and equivariance of the rectangular fixed-point constructions,
// plus the block-diagonal fixed-point theorem.
std::vector<CheckResult> verify_fixed_points();

// Structural invariants of the slide/insertion toolkit: slide-order
// independence, insertion/rectification agreement, increasing-subsequence
// oracle, descent preservation, evacuation, flips, stabilization symmetries.
std::vector<CheckResult> verify_properties(unsigned seed = 20240817u);

// Frozen reference row of the stabilization distribution over S_n (counts of
// permutations with stab = 1..n). Empty for n outside the tabulated range.
std::vector<long long> reference_stab_row(int n);

}  // namespace tlab
