#include "twocross/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace twocross {

PairMatrix pair_matrix(const Profile& p) {
    const int n = p.num_voters;
    const int m = p.num_candidates;
    if (m < 2) throw std::invalid_argument("pair matrix needs at least two candidates");

    std::vector<std::vector<int>> pos(n, std::vector<int>(m, 0));
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < m; ++i) pos[v][p.rankings[v][i] - 1] = i;
    }

    PairMatrix pm;
    std::vector<std::vector<uint8_t>> rows(n);
    for (int c = 1; c <= m; ++c) {
        for (int d = c + 1; d <= m; ++d) pm.column_pairs.emplace_back(c, d);
    }
    for (int v = 0; v < n; ++v) {
        rows[v].reserve(pm.column_pairs.size());
        for (const auto& [c, d] : pm.column_pairs) {
            rows[v].push_back(pos[v][c - 1] < pos[v][d - 1] ? 1 : 0);
        }
    }
    pm.matrix = BinaryMatrix::from_rows(rows);
    return pm;
}

std::optional<VoterOrder> recognize_two_crossing(const Profile& p) {
    if (p.num_candidates < 2 || p.num_voters < 2) {
        return VoterOrder::identity(p.num_voters);
    }
    const PairMatrix pm = pair_matrix(p);
    const auto witness = circ_c1p_witness(pm.matrix);
    if (!witness) return std::nullopt;
    VoterOrder order;
    order.perm = witness->perm;
    return order;
}

Profile profile_from_matrix(const BinaryMatrix& m) {
    Profile p;
    p.num_voters = m.rows;
    p.num_candidates = 2 * m.cols;
    p.rankings.resize(m.rows);
    for (int v = 0; v < m.rows; ++v) {
        auto& rank = p.rankings[v];
        rank.reserve(p.num_candidates);
        for (int j = 0; j < m.cols; ++j) {
            const int c1 = 2 * j + 1;
            const int c2 = 2 * j + 2;
            if (m.bits[v][j]) {
                rank.push_back(c1);
                rank.push_back(c2);
            } else {
                rank.push_back(c2);
                rank.push_back(c1);
            }
        }
    }
    return p;
}

namespace {

double arc_distance(double a, double b) {
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    double d = std::fmod(std::fabs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

}  // namespace

Profile horseshoe_profile(const std::vector<double>& voter_angles,
                          const std::vector<double>& candidate_angles) {
    if (voter_angles.empty() || candidate_angles.empty()) {
        throw std::invalid_argument("horseshoe instance needs voters and candidates");
    }
    const int n = static_cast<int>(voter_angles.size());
    const int m = static_cast<int>(candidate_angles.size());
    Profile p;
    p.num_voters = n;
    p.num_candidates = m;
    p.rankings.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<double, int>> by_dist;
        by_dist.reserve(m);
        for (int c = 0; c < m; ++c) {
            by_dist.emplace_back(arc_distance(voter_angles[v], candidate_angles[c]), c + 1);
        }
        std::sort(by_dist.begin(), by_dist.end());
        for (int c = 0; c + 1 < m; ++c) {
            if (by_dist[c].first == by_dist[c + 1].first) {
                throw std::invalid_argument("tie in horseshoe arc distances for voter " +
                                            std::to_string(v + 1));
            }
        }
        for (const auto& [dist, cand] : by_dist) p.rankings[v].push_back(cand);
    }
    return p;
}

VoterOrder horseshoe_order(const std::vector<double>& voter_angles) {
    const int n = static_cast<int>(voter_angles.size());
    VoterOrder order = VoterOrder::identity(n);
    std::sort(order.perm.begin(), order.perm.end(),
              [&](int a, int b) { return voter_angles[a - 1] < voter_angles[b - 1]; });
    return order;
}

}  // namespace twocross
