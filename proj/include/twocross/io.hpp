#pragma once

#include <string>

#include <json.hpp>

#include "twocross/core.hpp"
#include "twocross/tournament.hpp"

// File ingestion (PrefLib-subset SOC profiles, tournament files, rho tables)
// and machine-readable result documents.

namespace twocross {

// Each data line is `<count>: <c1>,<c2>,...,<cm>`; '#' lines are comments.
// Voters are expanded in file order with duplicates adjacent.
Profile parse_profile_soc(const std::string& text);

// Groups identical adjacent ballots into counted lines.
std::string emit_profile_soc(const Profile& p);

// First line `m`; subsequent lines `c c' w` with w > 0 meaning margin w.
WeightedTournament parse_tournament(const std::string& text);

// n lines of m values; decimal values are scaled to integers by the
// smallest common power of ten.
MisrepMatrix parse_misrep(const std::string& text);

// One structured document per CLI invocation.
struct ResultDocument {
    std::string command;
    std::string input_digest;
    std::string status;  // "ok" or "error"
    nlohmann::json result;

    nlohmann::json to_json() const;
    static ResultDocument from_json(const nlohmann::json& j);
};

std::string content_digest(const std::string& text);

}  // namespace twocross
