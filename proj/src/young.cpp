#include "twocross/young.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "twocross/recognition.hpp"

namespace twocross {

namespace {

struct Thresholds {
    long long lo;  // supporters of c must sum to >= lo
    long long hi;  // supporters of the rival must sum to <= hi
};

Thresholds thresholds_for(long long s, CondorcetVariant variant) {
    if (variant == CondorcetVariant::Weak) {
        return {(s + 1) / 2, s / 2};
    }
    // strong: majority margin strictly positive
    return {s / 2 + 1, (s + 1) / 2 - 1};
}

// ones of column must form [lo..hi] contiguously; returns false otherwise
bool plain_interval(const std::vector<uint8_t>& column, int& lo, int& hi) {
    const int n = static_cast<int>(column.size());
    lo = -1;
    hi = -1;
    for (int i = 0; i < n; ++i) {
        if (column[i]) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0) return true;  // empty set counts as an interval
    for (int i = lo; i <= hi; ++i) {
        if (!column[i]) return false;
    }
    return true;
}

}  // namespace

DifferenceConstraintSystem build_difference_system(const Profile& p, const VoterOrder& order,
                                                   int candidate, long long s,
                                                   CondorcetVariant variant) {
    const int n = p.num_voters;
    if (!order.is_permutation_of(n)) {
        throw std::invalid_argument("voter order is not a permutation of [1..n]");
    }
    if (s < 0 || s > n) throw std::invalid_argument("kept count s out of range");
    if (candidate < 1 || candidate > p.num_candidates) {
        throw std::invalid_argument("candidate id out of range");
    }

    const auto [t_lo, t_hi] = thresholds_for(s, variant);
    DifferenceConstraintSystem d;
    d.num_vars = n + 1;
    d.kept_count = s;

    for (int v = 1; v <= n; ++v) {
        d.constraints.push_back({v, v - 1, 1});   // S_v - S_{v-1} <= 1
        d.constraints.push_back({v - 1, v, 0});   // S_{v-1} - S_v <= 0
    }
    d.constraints.push_back({n, 0, s});    // S_n - S_0 = s, as two inequalities
    d.constraints.push_back({0, n, -s});

    std::vector<uint8_t> column(n), complement(n);
    for (int rival = 1; rival <= p.num_candidates; ++rival) {
        if (rival == candidate) continue;
        bool any_one = false;
        for (int t = 0; t < n; ++t) {
            column[t] = p.prefers(order.perm[t], candidate, rival) ? 1 : 0;
            complement[t] = column[t] ^ 1;
            any_one = any_one || column[t];
        }
        int lo = 0, hi = 0;
        if (!any_one) {
            // no supporter anywhere: sum over the rival's full interval <= t_hi
            d.constraints.push_back({n, 0, t_hi});
        } else if (plain_interval(column, lo, hi)) {
            // S_hi - S_{lo-1} >= t_lo
            d.constraints.push_back({lo, hi + 1, -t_lo});
        } else if (plain_interval(complement, lo, hi)) {
            // wrap-around supporter set; bound the rival's interval instead
            d.constraints.push_back({hi + 1, lo, t_hi});
        } else {
            throw std::invalid_argument("order fails the two-crossing check for pair (" +
                                        std::to_string(candidate) + "," +
                                        std::to_string(rival) + ")");
        }
    }
    return d;
}

std::optional<std::vector<long long>> solve_difference_system(
    const DifferenceConstraintSystem& d) {
    // super-source with zero-weight edges to every variable: start all at 0
    std::vector<long long> dist(d.num_vars, 0);
    bool changed = true;
    for (int pass = 0; pass < d.num_vars && changed; ++pass) {
        changed = false;
        for (const auto& c : d.constraints) {
            if (dist[c.j] + c.bound < dist[c.i]) {
                dist[c.i] = dist[c.j] + c.bound;
                changed = true;
            }
        }
    }
    if (changed) {
        for (const auto& c : d.constraints) {
            if (dist[c.j] + c.bound < dist[c.i]) return std::nullopt;  // negative cycle
        }
    }
    for (const auto& c : d.constraints) {
        if (dist[c.i] - dist[c.j] > c.bound) {
            throw std::logic_error("difference-system witness violates a constraint");
        }
    }
    return dist;
}

YoungResult young_score(const Profile& p, int candidate, CondorcetVariant variant) {
    const auto order = recognize_two_crossing(p);
    if (!order) throw std::invalid_argument("profile is not two-crossing");

    YoungResult result;
    result.candidate = candidate;
    result.variant = variant;
    const int n = p.num_voters;
    for (long long s = n; s >= 0; --s) {
        const auto system = build_difference_system(p, *order, candidate, s, variant);
        const auto witness = solve_difference_system(system);
        if (!witness) continue;
        result.finite = true;
        result.score = n - s;
        const auto& dist = *witness;
        for (int v = 1; v <= n; ++v) {
            const long long x = dist[v] - dist[v - 1];
            if (x != 0 && x != 1) {
                throw std::logic_error("difference-system witness is not 0/1 integral");
            }
            if (x == 1) result.kept_voters.push_back(order->perm[v - 1]);
        }
        std::sort(result.kept_voters.begin(), result.kept_voters.end());
        return result;
    }
    return result;  // infinite (possible only for the strong variant)
}

namespace {

bool condorcet_on_subset(const Profile& p, const std::vector<int>& kept, int candidate,
                         CondorcetVariant variant) {
    for (int rival = 1; rival <= p.num_candidates; ++rival) {
        if (rival == candidate) continue;
        long long margin = 0;
        for (int v : kept) margin += p.prefers(v, candidate, rival) ? 1 : -1;
        if (variant == CondorcetVariant::Strong ? margin <= 0 : margin < 0) return false;
    }
    return true;
}

}  // namespace

YoungResult brute_force_young(const Profile& p, int candidate, CondorcetVariant variant,
                              int max_voters) {
    const int n = p.num_voters;
    if (n > max_voters) {
        throw std::invalid_argument("profile too large for the brute-force oracle");
    }
    YoungResult result;
    result.candidate = candidate;
    result.variant = variant;
    for (int size = n; size >= 0; --size) {
        for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            std::vector<int> kept;
            for (int v = 0; v < n; ++v) {
                if (mask & (uint32_t{1} << v)) kept.push_back(v + 1);
            }
            if (condorcet_on_subset(p, kept, candidate, variant)) {
                result.finite = true;
                result.score = n - size;
                result.kept_voters = kept;
                return result;
            }
        }
    }
    return result;
}

YoungWinners young_winners(const Profile& p, CondorcetVariant variant) {
    YoungWinners out;
    bool any_finite = false;
    long long best = 0;
    for (int c = 1; c <= p.num_candidates; ++c) {
        YoungResult r = young_score(p, c, variant);
        if (r.finite && (!any_finite || r.score < best)) {
            any_finite = true;
            best = r.score;
        }
        out.scores.emplace(c, std::move(r));
    }
    for (const auto& [c, r] : out.scores) {
        if (!any_finite || (r.finite && r.score == best)) out.winners.insert(c);
    }
    return out;
}

}  // namespace twocross
