#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twocross/cc.hpp"
#include "twocross/core.hpp"
#include "twocross/io.hpp"
#include "twocross/recognition.hpp"
#include "twocross/tournament.hpp"
#include "twocross/young.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

twocross::VoterOrder parse_order_flag(const std::string& text, int n) {
    twocross::VoterOrder order;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) order.perm.push_back(std::stoi(token));
    if (!order.is_permutation_of(n)) {
        throw std::runtime_error("--order is not a permutation of [1.." + std::to_string(n) + "]");
    }
    return order;
}

void print_document(const std::string& command, const std::string& input, json result) {
    twocross::ResultDocument doc;
    doc.command = command;
    doc.input_digest = twocross::content_digest(input);
    doc.status = "ok";
    doc.result = std::move(result);
    std::cout << doc.to_json().dump(2) << "\n";
}

json young_result_json(const twocross::YoungResult& r) {
    json j{{"candidate", r.candidate},
           {"variant", r.variant == twocross::CondorcetVariant::Weak ? "weak" : "strong"}};
    if (r.finite) {
        j["score"] = r.score;
        j["kept_voters"] = r.kept_voters;
    } else {
        j["score"] = "infinity";
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-crossing election toolkit"};
    app.require_subcommand(1);

    std::string profile_path, order_flag, condorcet_flag, variant = "weak";
    std::string rho_flag = "borda", mode_flag = "utilitarian", tournament_path;
    int max_k = -1, candidate = 0, committee_k = 1, gen_voters = 0, gen_candidates = 0;
    bool use_oracle = false;
    unsigned long long seed = 0;

    auto* reco = app.add_subcommand("recognize", "two-crossing recognition");
    reco->add_option("profile", profile_path)->required();
    reco->add_option("--order", order_flag, "voter order as comma-separated ids");
    reco->add_option("--max-k", max_k, "report per-pair crossing maxima against this bound");

    auto* marg = app.add_subcommand("margins", "majority margin matrix");
    marg->add_option("profile", profile_path)->required();
    marg->add_option("--condorcet", condorcet_flag)
        ->check(CLI::IsMember({"weak", "strong"}));

    auto* young = app.add_subcommand("young", "Young scores");
    young->add_option("profile", profile_path)->required();
    young->add_option("--candidate", candidate);
    young->add_option("--variant", variant)->check(CLI::IsMember({"weak", "strong"}));
    young->add_flag("--oracle", use_oracle, "force the brute-force oracle");

    auto* cc = app.add_subcommand("cc", "Chamberlin-Courant committee");
    cc->add_option("profile", profile_path)->required();
    cc->add_option("-k", committee_k)->required();
    cc->add_option("--rho", rho_flag, "borda or a misrepresentation file");
    cc->add_option("--mode", mode_flag)->check(CLI::IsMember({"utilitarian", "egalitarian"}));
    cc->add_flag("--oracle", use_oracle);

    auto* synth = app.add_subcommand("synthesize", "profile realizing a tournament");
    synth->add_option("--tournament", tournament_path)->required();

    auto* gen = app.add_subcommand("gen", "profile generators");
    gen->require_subcommand(1);
    auto* horseshoe = gen->add_subcommand("horseshoe");
    horseshoe->add_option("--voters", gen_voters)->required();
    horseshoe->add_option("--candidates", gen_candidates)->required();
    horseshoe->add_option("--seed", seed)->required();
    auto* bubblesort = gen->add_subcommand("bubblesort");
    bubblesort->add_option("--candidates", gen_candidates)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (reco->parsed()) {
            const std::string text = read_file(profile_path);
            const auto profile = twocross::parse_profile_soc(text);
            json result;
            if (!order_flag.empty()) {
                const auto order = parse_order_flag(order_flag, profile.num_voters);
                const auto report = twocross::crossing_counts(profile, order);
                json pairs = json::array();
                for (const auto& [pair, count] : report.per_pair) {
                    pairs.push_back({{"pair", {pair.first, pair.second}}, {"crossings", count}});
                }
                result["per_pair"] = pairs;
                result["maximum"] = report.maximum;
                if (max_k >= 0) result["within_bound"] = report.maximum <= max_k;
            } else {
                const auto witness = twocross::recognize_two_crossing(profile);
                result["two_crossing"] = witness.has_value();
                if (witness) result["witness"] = witness->perm;
            }
            print_document("recognize", text, result);
        } else if (marg->parsed()) {
            const std::string text = read_file(profile_path);
            const auto profile = twocross::parse_profile_soc(text);
            const auto mm = twocross::majority_margins(profile);
            json result{{"margins", mm.margins}};
            if (!condorcet_flag.empty()) {
                const auto v = condorcet_flag == "strong" ? twocross::CondorcetVariant::Strong
                                                          : twocross::CondorcetVariant::Weak;
                result["condorcet_winners"] = twocross::condorcet_winners(profile, v);
            }
            print_document("margins", text, result);
        } else if (young->parsed()) {
            const std::string text = read_file(profile_path);
            const auto profile = twocross::parse_profile_soc(text);
            const auto v = variant == "strong" ? twocross::CondorcetVariant::Strong
                                               : twocross::CondorcetVariant::Weak;
            json result;
            if (candidate > 0) {
                const auto r = use_oracle ? twocross::brute_force_young(profile, candidate, v)
                                          : twocross::young_score(profile, candidate, v);
                result = young_result_json(r);
            } else {
                if (use_oracle) {
                    json scores = json::array();
                    for (int c = 1; c <= profile.num_candidates; ++c) {
                        scores.push_back(young_result_json(
                            twocross::brute_force_young(profile, c, v)));
                    }
                    result["scores"] = scores;
                } else {
                    const auto winners = twocross::young_winners(profile, v);
                    json scores = json::array();
                    for (const auto& [c, r] : winners.scores) scores.push_back(young_result_json(r));
                    result["scores"] = scores;
                    result["winners"] = winners.winners;
                }
            }
            print_document("young", text, result);
        } else if (cc->parsed()) {
            const std::string text = read_file(profile_path);
            const auto profile = twocross::parse_profile_soc(text);
            const auto rho = rho_flag == "borda"
                                 ? twocross::borda_misrep(profile)
                                 : twocross::parse_misrep(read_file(rho_flag));
            const auto mode = mode_flag == "egalitarian" ? twocross::AggregationMode::Egalitarian
                                                         : twocross::AggregationMode::Utilitarian;
            const auto r = use_oracle
                               ? twocross::brute_force_cc(profile, rho, committee_k, mode)
                               : twocross::cc_solve(profile, rho, committee_k, mode);
            json result{{"value", r.value},
                        {"committee", r.committee},
                        {"assignment", r.assignment.rep}};
            print_document("cc", text, result);
        } else if (synth->parsed()) {
            const std::string text = read_file(tournament_path);
            const auto tournament = twocross::parse_tournament(text);
            const auto profile = twocross::synthesize_two_crossing(tournament);
            std::cout << twocross::emit_profile_soc(profile);
        } else if (gen->parsed()) {
            if (horseshoe->parsed()) {
                std::mt19937_64 rng(seed);
                std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
                for (;;) {
                    std::vector<double> voters(gen_voters), candidates(gen_candidates);
                    for (auto& a : voters) a = angle(rng);
                    for (auto& a : candidates) a = angle(rng);
                    try {
                        const auto profile = twocross::horseshoe_profile(voters, candidates);
                        std::cout << twocross::emit_profile_soc(profile);
                        break;
                    } catch (const std::invalid_argument&) {
                        continue;  // distance tie; redraw
                    }
                }
            } else {
                std::cout << twocross::emit_profile_soc(
                    twocross::double_bubblesort_profile(gen_candidates));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
