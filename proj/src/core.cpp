#include "twocross/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twocross {

bool Profile::prefers(int voter, int c, int cprime) const {
    for (int id : rankings[voter - 1]) {
        if (id == c) return true;
        if (id == cprime) return false;
    }
    return false;
}

VoterOrder VoterOrder::identity(int n) {
    VoterOrder o;
    o.perm.resize(n);
    std::iota(o.perm.begin(), o.perm.end(), 1);
    return o;
}

bool VoterOrder::is_permutation_of(int n) const {
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool MisrepMatrix::consistent_with(const Profile& p) const {
    if (num_voters != p.num_voters || num_candidates != p.num_candidates) return false;
    for (int v = 1; v <= p.num_voters; ++v) {
        const auto& rank = p.ranking(v);
        for (size_t i = 1; i < rank.size(); ++i) {
            if (value(v, rank[i - 1]) > value(v, rank[i])) return false;
        }
    }
    return true;
}

bool Assignment::valid(const Profile& p) const {
    if (static_cast<int>(rep.size()) != p.num_voters) return false;
    std::set<int> image(rep.begin(), rep.end());
    for (int c : image) {
        if (c < 1 || c > p.num_candidates) return false;
    }
    return image == committee && static_cast<int>(committee.size()) <= k;
}

Profile validate_profile(const std::vector<std::vector<int>>& raw) {
    if (raw.empty()) throw std::invalid_argument("profile has no voters");
    int m = 0;
    for (const auto& row : raw) {
        for (int id : row) m = std::max(m, id);
    }
    if (m == 0) throw std::invalid_argument("profile has no candidates");
    for (size_t v = 0; v < raw.size(); ++v) {
        const auto& row = raw[v];
        if (static_cast<int>(row.size()) != m) {
            throw std::invalid_argument("voter " + std::to_string(v + 1) +
                                        ": ranking has wrong length");
        }
        std::vector<char> seen(m + 1, 0);
        for (int id : row) {
            if (id < 1 || id > m) {
                throw std::invalid_argument("voter " + std::to_string(v + 1) +
                                            ": candidate id out of range");
            }
            if (seen[id]) {
                throw std::invalid_argument("voter " + std::to_string(v + 1) +
                                            ": duplicate candidate " + std::to_string(id));
            }
            seen[id] = 1;
        }
    }
    Profile p;
    p.num_voters = static_cast<int>(raw.size());
    p.num_candidates = m;
    p.rankings = raw;
    return p;
}

namespace {

// positions[v-1][c-1] = 0-based rank position of candidate c for voter v
std::vector<std::vector<int>> rank_positions(const Profile& p) {
    std::vector<std::vector<int>> pos(p.num_voters, std::vector<int>(p.num_candidates, 0));
    for (int v = 0; v < p.num_voters; ++v) {
        for (int i = 0; i < p.num_candidates; ++i) {
            pos[v][p.rankings[v][i] - 1] = i;
        }
    }
    return pos;
}

}  // namespace

MarginMatrix majority_margins(const Profile& p) {
    const auto pos = rank_positions(p);
    MarginMatrix mm;
    mm.num_candidates = p.num_candidates;
    mm.margins.assign(p.num_candidates, std::vector<long long>(p.num_candidates, 0));
    for (int v = 0; v < p.num_voters; ++v) {
        for (int c = 0; c < p.num_candidates; ++c) {
            for (int d = c + 1; d < p.num_candidates; ++d) {
                if (pos[v][c] < pos[v][d]) {
                    ++mm.margins[c][d];
                    --mm.margins[d][c];
                } else {
                    --mm.margins[c][d];
                    ++mm.margins[d][c];
                }
            }
        }
    }
    return mm;
}

std::set<int> condorcet_winners(const Profile& p, CondorcetVariant variant) {
    const MarginMatrix mm = majority_margins(p);
    std::set<int> winners;
    for (int c = 1; c <= p.num_candidates; ++c) {
        bool ok = true;
        for (int d = 1; d <= p.num_candidates && ok; ++d) {
            if (d == c) continue;
            const long long margin = mm.margin(c, d);
            ok = variant == CondorcetVariant::Strong ? margin > 0 : margin >= 0;
        }
        if (ok) winners.insert(c);
    }
    return winners;
}

CrossingReport crossing_counts(const Profile& p, const VoterOrder& order) {
    if (!order.is_permutation_of(p.num_voters)) {
        throw std::invalid_argument("voter order is not a permutation of [1..n]");
    }
    const auto pos = rank_positions(p);
    CrossingReport report;
    for (int c = 0; c < p.num_candidates; ++c) {
        for (int d = c + 1; d < p.num_candidates; ++d) {
            int crossings = 0;
            for (int i = 0; i + 1 < p.num_voters; ++i) {
                const int a = order.perm[i] - 1;
                const int b = order.perm[i + 1] - 1;
                if ((pos[a][c] < pos[a][d]) != (pos[b][c] < pos[b][d])) ++crossings;
            }
            report.per_pair[{c + 1, d + 1}] = crossings;
            report.maximum = std::max(report.maximum, crossings);
        }
    }
    return report;
}

MisrepMatrix borda_misrep(const Profile& p) {
    MisrepMatrix rho;
    rho.num_voters = p.num_voters;
    rho.num_candidates = p.num_candidates;
    rho.provenance = MisrepMatrix::Provenance::Borda;
    rho.values.assign(p.num_voters, std::vector<long long>(p.num_candidates, 0));
    for (int v = 0; v < p.num_voters; ++v) {
        for (int i = 0; i < p.num_candidates; ++i) {
            rho.values[v][p.rankings[v][i] - 1] = i;
        }
    }
    return rho;
}

long long evaluate_assignment(const Profile& p, const MisrepMatrix& rho,
                              const Assignment& a, AggregationMode mode) {
    if (!rho.consistent_with(p)) throw std::invalid_argument("rho inconsistent with profile");
    if (!a.valid(p)) throw std::invalid_argument("invalid assignment");
    long long total = 0;
    bool first = true;
    for (int v = 1; v <= p.num_voters; ++v) {
        const long long d = rho.value(v, a.rep[v - 1]);
        if (mode == AggregationMode::Utilitarian) {
            total += d;
        } else {
            total = first ? d : std::max(total, d);
            first = false;
        }
    }
    return total;
}

}  // namespace twocross
