#include "twocross/cc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "twocross/recognition.hpp"

namespace twocross {

namespace {

// Aggregated dissatisfaction with a distinguished neutral element (the
// identity of the aggregation: 0 for sum, a below-everything value for max)
// and a distinguished infeasible element. Never finite sentinels.
struct Agg {
    enum class Kind : int8_t { Neutral, Finite, Infeasible };
    Kind kind = Kind::Infeasible;
    long long v = 0;

    static Agg neutral() { return {Kind::Neutral, 0}; }
    static Agg finite(long long x) { return {Kind::Finite, x}; }
    static Agg infeasible() { return {Kind::Infeasible, 0}; }

    bool operator<(const Agg& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return kind == Kind::Finite && v < o.v;
    }
};

Agg combine(const Agg& a, const Agg& b, AggregationMode mode) {
    if (a.kind == Agg::Kind::Infeasible || b.kind == Agg::Kind::Infeasible) {
        return Agg::infeasible();
    }
    if (a.kind == Agg::Kind::Neutral) return b;
    if (b.kind == Agg::Kind::Neutral) return a;
    return Agg::finite(mode == AggregationMode::Utilitarian ? a.v + b.v : std::max(a.v, b.v));
}

struct Choice2 {
    int16_t w1 = -1;
    int8_t t0 = -1;
    int8_t via_dyp2 = 0;
};

}  // namespace

CCResult cc_solve(const Profile& p, const MisrepMatrix& rho, int k, AggregationMode mode) {
    if (k < 1 || k > p.num_candidates) throw std::invalid_argument("committee bound k out of range");
    if (!rho.consistent_with(p)) throw std::invalid_argument("rho inconsistent with profile");
    const auto order = recognize_two_crossing(p);
    if (!order) throw std::invalid_argument("profile is not two-crossing");

    const int n = p.num_voters;
    const int m = p.num_candidates;

    // re-index voters by the witnessing order
    std::vector<std::vector<long long>> cost(n + 1, std::vector<long long>(m + 1, 0));
    for (int v = 1; v <= n; ++v) {
        for (int c = 1; c <= m; ++c) cost[v][c] = rho.value(order->perm[v - 1], c);
    }

    // dyp[l][r][t]: optimal dissatisfaction of voters [l..r] with t candidates;
    // dyp2 additionally enforces the root candidate, occurring at least once.
    const auto idx = [&](int l, int r, int t) { return (l * (n + 1) + r) * (k + 1) + t; };
    const auto idx2 = [&](int l, int r, int t, int c) {
        return ((l * (n + 1) + r) * (k + 1) + t) * m + (c - 1);
    };
    std::vector<Agg> dyp(static_cast<size_t>(n + 2) * (n + 1) * (k + 1), Agg::infeasible());
    std::vector<Agg> dyp2(static_cast<size_t>(n + 2) * (n + 1) * (k + 1) * m, Agg::infeasible());
    std::vector<int> best_root(dyp.size(), 0);
    std::vector<Choice2> choice(dyp2.size());

    for (int l = 1; l <= n + 1; ++l) {
        for (int t = 0; t <= k; ++t) dyp[idx(l, l - 1, t)] = Agg::neutral();
    }

    for (int len = 1; len <= n; ++len) {
        for (int l = 1; l + len - 1 <= n; ++l) {
            const int r = l + len - 1;
            for (int t = 1; t <= k; ++t) {
                for (int c = 1; c <= m; ++c) {
                    Agg best = Agg::infeasible();
                    Choice2 bc;
                    for (int w1 = l; w1 <= r; ++w1) {
                        for (int t0 = 0; t0 <= t - 1; ++t0) {
                            const Agg left =
                                combine(dyp[idx(l, w1 - 1, t0)], Agg::finite(cost[w1][c]), mode);
                            if (left.kind == Agg::Kind::Infeasible) continue;
                            const Agg right_closed = dyp[idx(w1 + 1, r, t - t0 - 1)];
                            const Agg right_open = dyp2[idx2(w1 + 1, r, t - t0, c)];
                            const Agg cand_closed = combine(left, right_closed, mode);
                            if (cand_closed < best) {
                                best = cand_closed;
                                bc = {static_cast<int16_t>(w1), static_cast<int8_t>(t0), 0};
                            }
                            const Agg cand_open = combine(left, right_open, mode);
                            if (cand_open < best) {
                                best = cand_open;
                                bc = {static_cast<int16_t>(w1), static_cast<int8_t>(t0), 1};
                            }
                        }
                    }
                    dyp2[idx2(l, r, t, c)] = best;
                    choice[idx2(l, r, t, c)] = bc;
                }
                Agg best = Agg::infeasible();
                int root = 0;
                for (int c = 1; c <= m; ++c) {
                    if (dyp2[idx2(l, r, t, c)] < best) {
                        best = dyp2[idx2(l, r, t, c)];
                        root = c;
                    }
                }
                dyp[idx(l, r, t)] = best;
                best_root[idx(l, r, t)] = root;
            }
        }
    }

    const Agg answer = dyp[idx(1, n, k)];
    if (answer.kind != Agg::Kind::Finite) {
        throw std::logic_error("dynamic program produced no feasible assignment");
    }

    // reconstruct an optimal assignment by tracing stored argmins
    std::vector<int> rep(n + 1, 0);
    auto rebuild2 = [&](auto&& self2, auto&& self, int l, int r, int t, int c) -> void {
        const Choice2 bc = choice[idx2(l, r, t, c)];
        const int w1 = bc.w1;
        const int t0 = bc.t0;
        rep[w1] = c;
        self(self2, self, l, w1 - 1, t0);
        if (bc.via_dyp2) {
            self2(self2, self, w1 + 1, r, t - t0, c);
        } else {
            self(self2, self, w1 + 1, r, t - t0 - 1);
        }
    };
    auto rebuild = [&](auto&& self2, auto&& self, int l, int r, int t) -> void {
        if (l > r) return;
        self2(self2, self, l, r, t, best_root[idx(l, r, t)]);
    };
    rebuild(rebuild2, rebuild, 1, n, k);

    CCResult result;
    result.value = answer.v;
    result.assignment.rep.assign(n, 0);
    result.assignment.k = k;
    for (int v = 1; v <= n; ++v) {
        result.assignment.rep[order->perm[v - 1] - 1] = rep[v];
    }
    for (int c : result.assignment.rep) result.assignment.committee.insert(c);
    result.committee = result.assignment.committee;

    if (evaluate_assignment(p, rho, result.assignment, mode) != result.value) {
        throw std::logic_error("reconstructed assignment does not match the optimal value");
    }
    return result;
}

CCResult brute_force_cc(const Profile& p, const MisrepMatrix& rho, int k, AggregationMode mode,
                        long long max_committees) {
    if (k < 1 || k > p.num_candidates) throw std::invalid_argument("committee bound k out of range");
    if (!rho.consistent_with(p)) throw std::invalid_argument("rho inconsistent with profile");
    const int n = p.num_voters;
    const int m = p.num_candidates;
    if (m > 62) throw std::invalid_argument("too many candidates for the brute-force oracle");

    long long count = 0;
    bool have_best = false;
    long long best_value = 0;
    std::vector<int> best_rep;

    for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
        if (std::popcount(mask) > k) continue;
        if (++count > max_committees) {
            throw std::invalid_argument("committee enumeration exceeds the oracle bound");
        }
        long long value = 0;
        bool first = true;
        std::vector<int> rep(n, 0);
        for (int v = 1; v <= n; ++v) {
            long long best_rho = 0;
            int best_c = 0;
            for (int c = 1; c <= m; ++c) {
                if (!(mask & (uint64_t{1} << (c - 1)))) continue;
                if (best_c == 0 || rho.value(v, c) < best_rho) {
                    best_rho = rho.value(v, c);
                    best_c = c;
                }
            }
            rep[v - 1] = best_c;
            if (mode == AggregationMode::Utilitarian) {
                value += best_rho;
            } else {
                value = first ? best_rho : std::max(value, best_rho);
            }
            first = false;
        }
        if (!have_best || value < best_value) {
            have_best = true;
            best_value = value;
            best_rep = rep;
        }
    }

    CCResult result;
    result.value = best_value;
    result.assignment.rep = best_rep;
    result.assignment.k = k;
    for (int c : best_rep) result.assignment.committee.insert(c);
    result.committee = result.assignment.committee;
    return result;
}

}  // namespace twocross
