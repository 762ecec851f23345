// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each criterion is self-contained and uses the brute-force
// oracles where cross-checking is required.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "helpers.hpp"
#include "twocross/cc.hpp"
#include "twocross/recognition.hpp"
#include "twocross/tournament.hpp"
#include "twocross/young.hpp"

using namespace twocross;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string label;
    std::function<bool()> run;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool require(bool ok, const char* what) {
    if (!ok) std::fprintf(stderr, "  failed: %s\n", what);
    return ok;
}

// ---- criterion bodies -----------------------------------------------------

bool figure1_recognition() {
    const auto start = Clock::now();
    const Profile p = testutil::figure1();
    const auto order = recognize_two_crossing(p);
    bool ok = require(order.has_value(), "no witness for the 7x4 fixture");
    if (ok) ok = require(crossing_counts(p, *order).maximum <= 2, "witness exceeds 2 crossings");
    ok = ok && require(crossing_counts(p, VoterOrder::identity(7)).maximum == 2,
                       "identity-order maximum is not exactly 2");
    return ok && require(seconds_since(start) < 1.0, "runtime >= 1 s");
}

bool bubblesort_reproduction() {
    const Profile p = double_bubblesort_profile(4);
    const std::vector<std::vector<int>> expected{
        {1, 2, 3, 4}, {2, 1, 3, 4}, {2, 3, 1, 4}, {2, 3, 4, 1}, {3, 2, 4, 1},
        {3, 4, 2, 1}, {4, 3, 2, 1}, {4, 3, 1, 2}, {4, 1, 3, 2}, {1, 4, 3, 2},
        {1, 4, 2, 3}, {1, 2, 4, 3}, {1, 2, 3, 4}};
    bool ok = require(p.rankings == expected, "voter list differs from the 13-voter target");
    const MarginMatrix mm = majority_margins(p);
    for (int c = 1; c <= 4 && ok; ++c) {
        for (int d = c + 1; d <= 4 && ok; ++d) {
            ok = require(mm.margin(c, d) == 1, "margin is not +1");
        }
    }
    return ok;
}

bool mcgarvey_suite() {
    const auto start = Clock::now();
    std::mt19937 rng(101);
    std::bernoulli_distribution flip(0.5);
    bool ok = true;
    for (int it = 0; it < 200 && ok; ++it) {
        const int m = 2 + it % 5;
        const bool odd = flip(rng);
        std::uniform_int_distribution<long long> mag(odd ? 1 : 0, 7);
        std::vector<std::vector<long long>> margins(m, std::vector<long long>(m, 0));
        long long gap = 0;
        for (int c = 0; c < m; ++c) {
            for (int d = c + 1; d < m; ++d) {
                long long w = mag(rng);
                if (w % 2 != (odd ? 1 : 0)) w = odd ? w - 1 + 2 * (w < 1) : w - 1;
                if (flip(rng)) w = -w;
                margins[c][d] = w;
                margins[d][c] = -w;
                gap += std::llabs(w - (odd ? 1 : 0));
            }
        }
        const auto t = WeightedTournament::from_margins(margins);
        const Profile p = synthesize_two_crossing(t);
        const MarginMatrix mm = majority_margins(p);
        for (int c = 1; c <= m && ok; ++c) {
            for (int d = c + 1; d <= m && ok; ++d) {
                ok = require(mm.margin(c, d) == t.margin(c, d), "margin mismatch");
            }
        }
        ok = ok && require(crossing_counts(p, VoterOrder::identity(p.num_voters)).maximum <= 2,
                           "synthesized profile not two-crossing");
        ok = ok && require(p.num_voters <= m * (m - 1) + 2 + gap, "voter bound exceeded");
    }
    return ok && require(seconds_since(start) < 30.0, "runtime >= 30 s");
}

bool recognition_completeness() {
    const auto start = Clock::now();
    std::mt19937 rng(102);
    bool ok = true;
    for (int it = 0; it < 200 && ok; ++it) {
        const Profile p = testutil::random_profile(rng, 1 + it % 6, 2 + it % 3);
        const auto order = recognize_two_crossing(p);
        if (order) {
            ok = require(crossing_counts(p, *order).maximum <= 2, "unsound witness");
        } else {
            ok = require(!testutil::exhaustive_two_crossing(p).has_value(),
                         "missed an existing witness");
        }
    }
    return ok && require(seconds_since(start) < 60.0, "runtime >= 60 s");
}

bool young_oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937 rng(103);
    bool ok = true;
    for (int it = 0; it < 300 && ok; ++it) {
        const auto inst = testutil::random_horseshoe(rng, 2 + it % 7, 2 + it % 4);
        const Profile& p = inst.profile;
        for (int c = 1; c <= p.num_candidates && ok; ++c) {
            for (auto variant : {CondorcetVariant::Weak, CondorcetVariant::Strong}) {
                const auto fast = young_score(p, c, variant);
                const auto slow = brute_force_young(p, c, variant);
                ok = require(fast.finite == slow.finite &&
                                 (!fast.finite || fast.score == slow.score),
                             "young score mismatch");
                if (ok && fast.finite && fast.score < p.num_voters) {
                    std::vector<std::vector<int>> rows;
                    for (int v : fast.kept_voters) rows.push_back(p.ranking(v));
                    const auto winners =
                        condorcet_winners(validate_profile(rows), variant);
                    ok = require(winners.count(c) == 1, "kept-voter witness invalid");
                }
                if (!ok) break;
            }
        }
    }
    return ok && require(seconds_since(start) < 300.0, "runtime >= 5 min");
}

bool young_fixed_values() {
    const Profile paradox = testutil::condorcet_paradox();
    bool ok = true;
    for (int c = 1; c <= 3 && ok; ++c) {
        ok = require(young_score(paradox, c, CondorcetVariant::Weak).score == 1,
                     "paradox weak score != 1");
        ok = ok && require(young_score(paradox, c, CondorcetVariant::Strong).score == 2,
                           "paradox strong score != 2");
        ok = ok && require(brute_force_young(paradox, c, CondorcetVariant::Weak).score == 1 &&
                               brute_force_young(paradox, c, CondorcetVariant::Strong).score == 2,
                           "oracle disagrees on the paradox");
    }
    const Profile fig1 = testutil::figure1();
    ok = ok && require(young_score(fig1, 3, CondorcetVariant::Weak).score == 0,
                       "candidate 3 weak score != 0");
    ok = ok && require(young_score(fig1, 3, CondorcetVariant::Strong).score == 0,
                       "candidate 3 strong score != 0");
    ok = ok && require(!young_score(fig1, 4, CondorcetVariant::Strong).finite,
                       "candidate 4 strong score is finite");
    return ok;
}

bool cc_oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937 rng(104);
    bool ok = true;
    for (int it = 0; it < 300 && ok; ++it) {
        const auto inst = testutil::random_horseshoe(rng, 1 + it % 8, 2 + it % 5);
        const Profile& p = inst.profile;
        const MisrepMatrix rho = it % 2 == 0 ? borda_misrep(p)
                                             : testutil::random_consistent_misrep(rng, p);
        const int k = 1 + it % std::min(3, p.num_candidates);
        for (auto mode : {AggregationMode::Utilitarian, AggregationMode::Egalitarian}) {
            const CCResult fast = cc_solve(p, rho, k, mode);
            const CCResult slow = brute_force_cc(p, rho, k, mode);
            ok = require(fast.value == slow.value, "cc value mismatch");
            ok = ok && require(evaluate_assignment(p, rho, fast.assignment, mode) == fast.value,
                               "reconstructed assignment mismatch");
            if (!ok) break;
        }
    }
    return ok && require(seconds_since(start) < 300.0, "runtime >= 5 min");
}

bool cc_fixed_values() {
    const Profile p = testutil::figure1();
    const MisrepMatrix rho = borda_misrep(p);
    const CCResult k1 = cc_solve(p, rho, 1, AggregationMode::Utilitarian);
    bool ok = require(k1.value == 5 && k1.committee == std::set<int>{3},
                      "k=1 is not value 5 with committee {3}");
    const CCResult k2 = cc_solve(p, rho, 2, AggregationMode::Utilitarian);
    ok = ok && require(k2.value == 1, "k=2 value != 1");
    const CCResult k4 = cc_solve(p, rho, 4, AggregationMode::Utilitarian);
    ok = ok && require(k4.value == 0, "k=4 value != 0");
    for (int k = 1; k <= 4 && ok; ++k) {
        ok = require(brute_force_cc(p, rho, k, AggregationMode::Utilitarian).value ==
                         cc_solve(p, rho, k, AggregationMode::Utilitarian).value,
                     "oracle disagrees");
    }
    return ok;
}

bool desk_scale_performance() {
    std::mt19937 rng(105);
    bool ok = true;

    {
        const auto inst = testutil::random_horseshoe(rng, 5000, 20);
        const auto start = Clock::now();
        ok = require(recognize_two_crossing(inst.profile).has_value(),
                     "large horseshoe not recognized");
        ok = ok && require(seconds_since(start) < 5.0, "recognition at n=5000 >= 5 s");
    }
    {
        const auto inst = testutil::random_horseshoe(rng, 300, 8);
        const auto start = Clock::now();
        const auto r = young_score(inst.profile, 1, CondorcetVariant::Strong);
        (void)r;
        ok = ok && require(seconds_since(start) < 10.0, "young at n=300 >= 10 s per candidate");
    }
    {
        const auto inst = testutil::random_horseshoe(rng, 100, 10);
        const MisrepMatrix rho = borda_misrep(inst.profile);
        const auto start = Clock::now();
        const CCResult r = cc_solve(inst.profile, rho, 5, AggregationMode::Utilitarian);
        ok = ok && require(evaluate_assignment(inst.profile, rho, r.assignment,
                                               AggregationMode::Utilitarian) == r.value,
                           "cc self-check failed at scale");
        ok = ok && require(seconds_since(start) < 60.0, "cc at n=100 >= 60 s");
    }
    return ok;
}

bool c1p_engine() {
    std::mt19937 rng(106);
    bool ok = true;
    for (int it = 0; it < 500 && ok; ++it) {
        const auto m = testutil::random_matrix(rng, 2 + it % 5, 1 + it % 6);
        const auto witness = c1p_witness(m);
        ok = require(witness.has_value() == testutil::exhaustive_c1p(m),
                     "decision disagrees with the permutation oracle");
        if (ok && witness) {
            ok = require(check_linear_runs(m, *witness), "witness fails the run checker");
        }
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "figure-1 recognition", figure1_recognition},
        {2, "double-bubblesort reproduction", bubblesort_reproduction},
        {3, "mcgarvey synthesis suite", mcgarvey_suite},
        {4, "recognition completeness", recognition_completeness},
        {5, "young oracle equivalence", young_oracle_equivalence},
        {6, "young fixed values", young_fixed_values},
        {7, "cc oracle equivalence", cc_oracle_equivalence},
        {8, "cc fixed values", cc_fixed_values},
        {9, "desk-scale performance", desk_scale_performance},
        {10, "c1p engine", c1p_engine},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  exception: %s\n", e.what());
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.number, c.label.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
