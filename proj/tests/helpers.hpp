#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "twocross/c1p.hpp"
#include "twocross/core.hpp"
#include "twocross/recognition.hpp"

// Shared test helpers: random generators and exhaustive oracles. The oracles
// stay independent of the library's recognition path.

namespace testutil {

inline twocross::Profile figure1() {
    return twocross::validate_profile({
        {1, 2, 3, 4},
        {2, 1, 3, 4},
        {3, 2, 1, 4},
        {3, 4, 2, 1},
        {3, 4, 1, 2},
        {3, 1, 4, 2},
        {1, 3, 4, 2},
    });
}

inline twocross::Profile condorcet_paradox() {
    return twocross::validate_profile({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
}

inline twocross::Profile random_profile(std::mt19937& rng, int n, int m) {
    std::vector<std::vector<int>> rows(n);
    for (auto& row : rows) {
        row.resize(m);
        std::iota(row.begin(), row.end(), 1);
        std::shuffle(row.begin(), row.end(), rng);
    }
    return twocross::validate_profile(rows);
}

// Horseshoe instance with distinct pairwise distances; retried on ties.
struct HorseshoeInstance {
    twocross::Profile profile;
    twocross::VoterOrder by_angle;
};

inline HorseshoeInstance random_horseshoe(std::mt19937& rng, int n, int m) {
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (;;) {
        std::vector<double> voters(n), candidates(m);
        for (auto& a : voters) a = angle(rng);
        for (auto& a : candidates) a = angle(rng);
        try {
            return {twocross::horseshoe_profile(voters, candidates),
                    twocross::horseshoe_order(voters)};
        } catch (const std::invalid_argument&) {
        }
    }
}

inline twocross::BinaryMatrix random_matrix(std::mt19937& rng, int rows, int cols,
                                            double density = 0.5) {
    std::bernoulli_distribution bit(density);
    std::vector<std::vector<uint8_t>> data(rows, std::vector<uint8_t>(cols, 0));
    for (auto& row : data) {
        for (auto& b : row) b = bit(rng) ? 1 : 0;
    }
    return twocross::BinaryMatrix::from_rows(data);
}

// Exhaustive C1P decision over all row permutations; rows <= ~8.
inline bool exhaustive_c1p(const twocross::BinaryMatrix& m) {
    auto perm = twocross::RowPermutation::identity(m.rows);
    do {
        if (twocross::check_linear_runs(m, perm)) return true;
    } while (std::next_permutation(perm.perm.begin(), perm.perm.end()));
    return false;
}

inline bool exhaustive_circ_c1p(const twocross::BinaryMatrix& m) {
    auto perm = twocross::RowPermutation::identity(m.rows);
    do {
        if (twocross::check_circular_runs(m, perm)) return true;
    } while (std::next_permutation(perm.perm.begin(), perm.perm.end()));
    return false;
}

// Exhaustive two-crossing decision over all voter orders; n <= ~8.
inline std::optional<twocross::VoterOrder> exhaustive_two_crossing(const twocross::Profile& p) {
    auto order = twocross::VoterOrder::identity(p.num_voters);
    do {
        if (twocross::crossing_counts(p, order).maximum <= 2) return order;
    } while (std::next_permutation(order.perm.begin(), order.perm.end()));
    return std::nullopt;
}

// Random misrepresentation matrix consistent with the profile by
// construction: per voter, non-decreasing values down the ranking.
inline twocross::MisrepMatrix random_consistent_misrep(std::mt19937& rng,
                                                       const twocross::Profile& p) {
    std::uniform_int_distribution<int> step(0, 3);
    twocross::MisrepMatrix rho;
    rho.num_voters = p.num_voters;
    rho.num_candidates = p.num_candidates;
    rho.values.assign(p.num_voters, std::vector<long long>(p.num_candidates, 0));
    for (int v = 1; v <= p.num_voters; ++v) {
        long long cur = step(rng) - 1;  // negative values are allowed
        for (int i = 0; i < p.num_candidates; ++i) {
            rho.values[v - 1][p.ranking(v)[i] - 1] = cur;
            cur += step(rng);
        }
    }
    return rho;
}

}  // namespace testutil
