#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twocross/c1p.hpp"
#include "twocross/core.hpp"

// Two-crossing recognition, the matrix<->profile reductions, and generators
// of structured profiles.

namespace twocross {

// One column per unordered candidate pair {c, c'} with c < c';
// entry[v][{c,c'}] = 1 iff voter v prefers c to c'.
struct PairMatrix {
    BinaryMatrix matrix;
    std::vector<std::pair<int, int>> column_pairs;
};

PairMatrix pair_matrix(const Profile& p);

// Returns an order under which every candidate pair crosses at most twice,
// or nullopt. O(n m^2) via the circular consecutive-ones reduction.
std::optional<VoterOrder> recognize_two_crossing(const Profile& p);

// Builds the profile with candidates c_j^1, c_j^2 per column j whose
// per-pair crossing counts equal the matrix's per-column switch counts
// under every voter order. Candidate ids: column j maps to 2j-1 and 2j.
Profile profile_from_matrix(const BinaryMatrix& m);

// Voters and candidates on the unit circle; each voter ranks candidates by
// increasing arc distance. Throws on distance ties. Sorting voters by angle
// witnesses two-crossing.
Profile horseshoe_profile(const std::vector<double>& voter_angles,
                          const std::vector<double>& candidate_angles);

// The by-angle witnessing order for a horseshoe instance.
VoterOrder horseshoe_order(const std::vector<double>& voter_angles);

}  // namespace twocross
