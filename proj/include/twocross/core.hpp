#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Core election types: profiles, majority statistics, crossing counts and
// misrepresentation machinery. Candidate and voter ids are 1-based.

namespace twocross {

// A preference profile: n voters, each a strict total order over m candidates.
// rankings[v-1][0] is voter v's most preferred candidate.
struct Profile {
    int num_voters = 0;
    int num_candidates = 0;
    std::vector<std::vector<int>> rankings;

    const std::vector<int>& ranking(int voter) const { return rankings[voter - 1]; }

    // true iff voter ranks c above c'
    bool prefers(int voter, int c, int cprime) const;
};

// A permutation of voter indices [1..n].
struct VoterOrder {
    std::vector<int> perm;

    static VoterOrder identity(int n);
    bool is_permutation_of(int n) const;
};

// Antisymmetric majority-margin table; margin(c, c') = n_{c,c'} - n_{c',c}.
struct MarginMatrix {
    int num_candidates = 0;
    std::vector<std::vector<long long>> margins;

    long long margin(int c, int cprime) const { return margins[c - 1][cprime - 1]; }
};

enum class CondorcetVariant { Weak, Strong };

// Per-voter, per-candidate dissatisfaction values (exact integers).
struct MisrepMatrix {
    enum class Provenance { Borda, Custom };

    int num_voters = 0;
    int num_candidates = 0;
    std::vector<std::vector<long long>> values;
    Provenance provenance = Provenance::Custom;

    long long value(int voter, int c) const { return values[voter - 1][c - 1]; }

    // c >_v c' must imply value(v,c) <= value(v,c').
    bool consistent_with(const Profile& p) const;
};

// A voter -> candidate representative map with committee bound k.
struct Assignment {
    std::vector<int> rep;  // rep[v-1] = candidate representing voter v
    std::set<int> committee;
    int k = 0;

    bool valid(const Profile& p) const;
};

enum class AggregationMode { Utilitarian, Egalitarian };

// Builds a Profile from raw ranking rows, validating that each row is a
// permutation of [1..m] where m is the largest id present. Throws
// std::invalid_argument on malformed input.
Profile validate_profile(const std::vector<std::vector<int>>& raw);

MarginMatrix majority_margins(const Profile& p);

std::set<int> condorcet_winners(const Profile& p, CondorcetVariant variant);

// Crossing counts of every unordered candidate pair under a voter order.
struct CrossingReport {
    std::map<std::pair<int, int>, int> per_pair;  // key (c, c') with c < c'
    int maximum = 0;
};

CrossingReport crossing_counts(const Profile& p, const VoterOrder& order);

MisrepMatrix borda_misrep(const Profile& p);

long long evaluate_assignment(const Profile& p, const MisrepMatrix& rho,
                              const Assignment& a, AggregationMode mode);

}  // namespace twocross
