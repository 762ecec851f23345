#pragma once

#include <set>
#include <vector>

#include "twocross/core.hpp"

// Optimal Chamberlin-Courant committees for two-crossing profiles via the
// two-table interval dynamic program, utilitarian and egalitarian.

namespace twocross {

struct CCResult {
    long long value = 0;  // optimal aggregated dissatisfaction
    Assignment assignment;
    std::set<int> committee;
};

// Solves the instance with the O(n^3 k^2 m) dynamic program. Throws when the
// profile is not two-crossing, rho is inconsistent, or k < 1.
CCResult cc_solve(const Profile& p, const MisrepMatrix& rho, int k, AggregationMode mode);

// Enumerates committees of size <= k; each voter takes a minimum-rho member.
// Any profile accepted. Throws when the committee count exceeds the bound.
CCResult brute_force_cc(const Profile& p, const MisrepMatrix& rho, int k, AggregationMode mode,
                        long long max_committees = 2'000'000);

}  // namespace twocross
