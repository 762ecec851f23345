#include "twocross/tournament.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twocross {

long long WeightedTournament::max_abs_weight() const {
    long long w = 0;
    for (const auto& row : margins) {
        for (long long v : row) w = std::max(w, std::abs(v));
    }
    return w;
}

WeightedTournament WeightedTournament::from_margins(
    const std::vector<std::vector<long long>>& margins) {
    const int m = static_cast<int>(margins.size());
    for (int c = 0; c < m; ++c) {
        if (static_cast<int>(margins[c].size()) != m) {
            throw std::invalid_argument("tournament margin table must be square");
        }
        if (margins[c][c] != 0) throw std::invalid_argument("tournament diagonal must be zero");
        for (int d = 0; d < m; ++d) {
            if (margins[c][d] != -margins[d][c]) {
                throw std::invalid_argument("tournament margins must be antisymmetric");
            }
        }
    }
    WeightedTournament t;
    t.num_candidates = m;
    t.margins = margins;
    return t;
}

Profile double_bubblesort_profile(int num_candidates) {
    const int m = num_candidates;
    if (m < 2) throw std::invalid_argument("double-bubblesort needs at least two candidates");

    std::vector<std::vector<int>> rankings;
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i + 1;
    rankings.push_back(cur);
    // descending sweep: candidate 1, then 2, ... moves to the back
    for (int round = 1; round < m; ++round) {
        for (int pos = 0; pos + round < m; ++pos) {
            std::swap(cur[pos], cur[pos + 1]);
            rankings.push_back(cur);
        }
    }
    // ascending sweep back to 12...m, iterating in reverse order
    for (int round = 1; round < m; ++round) {
        for (int pos = m - 2; pos >= round - 1; --pos) {
            std::swap(cur[pos], cur[pos + 1]);
            rankings.push_back(cur);
        }
    }
    return validate_profile(rankings);
}

namespace {

// Locates base voters with patterns "A x y B" and "rev(B) x y rev(A)";
// such a pair exists for every ordered (x, y) in the double-bubblesort base.
std::pair<int, int> locate_adjustment_pair(const std::vector<std::vector<int>>& base,
                                           int x, int y) {
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < static_cast<int>(base.size()); ++i) {
        index_of.emplace(base[i], i);
    }
    const int m = static_cast<int>(base[0].size());
    for (int i = 0; i < static_cast<int>(base.size()); ++i) {
        const auto& rank = base[i];
        for (int p = 0; p + 1 < m; ++p) {
            if (rank[p] != x || rank[p + 1] != y) continue;
            std::vector<int> mirror;
            mirror.reserve(m);
            for (int q = m - 1; q > p + 1; --q) mirror.push_back(rank[q]);
            mirror.push_back(x);
            mirror.push_back(y);
            for (int q = p - 1; q >= 0; --q) mirror.push_back(rank[q]);
            auto it = index_of.find(mirror);
            if (it != index_of.end()) return {i, it->second};
        }
    }
    throw std::logic_error("no adjustment pair found in double-bubblesort base");
}

}  // namespace

Profile synthesize_two_crossing(const WeightedTournament& t) {
    const int m = t.num_candidates;
    if (m < 2) throw std::invalid_argument("synthesis needs at least two candidates");

    bool any_odd = false, any_even = false;
    for (int c = 1; c <= m; ++c) {
        for (int d = c + 1; d <= m; ++d) {
            ((t.margin(c, d) % 2 != 0) ? any_odd : any_even) = true;
        }
    }
    if (any_odd && any_even) {
        throw std::invalid_argument("tournament weights must all share one parity");
    }
    const bool even_case = !any_odd;

    const Profile base_profile = double_bubblesort_profile(m);
    const auto& base = base_profile.rankings;
    const int reversed_at = m * (m - 1) / 2;  // index of the m...21 voter

    std::vector<long long> mult(base.size(), 1);
    const long long base_margin = even_case ? 0 : 1;
    for (int c = 1; c <= m; ++c) {
        for (int d = c + 1; d <= m; ++d) {
            const long long delta = t.margin(c, d) - base_margin;
            if (delta == 0) continue;
            const int x = delta > 0 ? c : d;
            const int y = delta > 0 ? d : c;
            const auto [i, j] = locate_adjustment_pair(base, x, y);
            const long long copies = std::abs(delta) / 2;
            mult[i] += copies;
            mult[j] += copies;
        }
    }

    std::vector<std::vector<int>> rankings;
    for (size_t i = 0; i < base.size(); ++i) {
        for (long long k = 0; k < mult[i]; ++k) rankings.push_back(base[i]);
        if (even_case && static_cast<int>(i) == reversed_at) {
            std::vector<int> reversed(m);
            for (int c = 0; c < m; ++c) reversed[c] = m - c;
            rankings.push_back(reversed);
        }
    }
    Profile result = validate_profile(rankings);

    const MarginMatrix realized = majority_margins(result);
    for (int c = 1; c <= m; ++c) {
        for (int d = 1; d <= m; ++d) {
            if (c != d && realized.margin(c, d) != t.margin(c, d)) {
                throw std::logic_error("synthesized profile does not realize target margins");
            }
        }
    }
    return result;
}

}  // namespace twocross
