#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twocross/core.hpp"

// Young scores for two-crossing profiles via difference-constraint
// feasibility, plus a brute-force oracle for arbitrary profiles.

namespace twocross {

// Constraints S_i - S_j <= bound over prefix-sum variables S_0..S_n.
struct DifferenceConstraint {
    int i = 0;
    int j = 0;
    long long bound = 0;
};

struct DifferenceConstraintSystem {
    int num_vars = 0;  // variables S_0 .. S_{num_vars-1}
    std::vector<DifferenceConstraint> constraints;
    long long kept_count = 0;  // the enforced s
};

struct YoungResult {
    int candidate = 0;
    CondorcetVariant variant = CondorcetVariant::Weak;
    bool finite = false;
    long long score = 0;                // meaningful when finite
    std::vector<int> kept_voters;       // original voter ids, when finite
};

// Encodes feasibility of keeping exactly s voters (indexed through the
// witnessing order) such that candidate c beats every rival under the
// weak/strong threshold. Throws if the order is not a two-crossing witness.
DifferenceConstraintSystem build_difference_system(const Profile& p, const VoterOrder& order,
                                                   int candidate, long long s,
                                                   CondorcetVariant variant);

// Label-correcting relaxation over the constraint graph with a super-source.
// Returns an integer witness S_0..S_n, or nullopt on a negative cycle.
std::optional<std::vector<long long>> solve_difference_system(
    const DifferenceConstraintSystem& d);

// Iterates s = n..0; first feasible s gives score n - s with a kept-voter
// witness. Throws if the profile is not two-crossing.
YoungResult young_score(const Profile& p, int candidate, CondorcetVariant variant);

// Enumerates kept subsets in decreasing size; any profile accepted.
YoungResult brute_force_young(const Profile& p, int candidate, CondorcetVariant variant,
                              int max_voters = 12);

struct YoungWinners {
    std::map<int, YoungResult> scores;  // per candidate
    std::set<int> winners;
};

YoungWinners young_winners(const Profile& p, CondorcetVariant variant);

}  // namespace twocross
