#pragma once

#include <vector>

#include "twocross/core.hpp"

// Synthesis of two-crossing profiles realizing a target weighted majority
// tournament (Debord-McGarvey for two-crossing elections).

namespace twocross {

struct WeightedTournament {
    int num_candidates = 0;
    std::vector<std::vector<long long>> margins;  // antisymmetric, zero diagonal

    long long margin(int c, int cprime) const { return margins[c - 1][cprime - 1]; }
    long long max_abs_weight() const;

    static WeightedTournament from_margins(const std::vector<std::vector<long long>>& margins);
};

// The m(m-1)+1 voter base profile: one adjacent swap per voter, descending
// to m...21 and back. All margins are +1 for c < c' and the construction
// order witnesses two-crossing.
Profile double_bubblesort_profile(int num_candidates);

// A profile whose majority margins equal the target exactly, two-crossing
// under its construction order. All nonzero target weights must share
// parity. At most m(m-1) + 2 + sum |target - base| voters.
Profile synthesize_two_crossing(const WeightedTournament& t);

}  // namespace twocross
