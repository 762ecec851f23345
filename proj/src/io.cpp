#include "twocross/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace twocross {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Profile parse_profile_soc(const std::string& text) {
    std::vector<std::vector<int>> rows;
    const auto lines = split_lines(text);
    for (size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) parse_fail(li + 1, "expected `<count>: <ranking>`");
        long long count = 0;
        try {
            size_t used = 0;
            count = std::stoll(line.substr(0, colon), &used);
            std::string rest = line.substr(0, colon).substr(used);
            if (!blank(rest)) parse_fail(li + 1, "malformed count");
        } catch (const std::invalid_argument&) {
            parse_fail(li + 1, "malformed count");
        }
        if (count <= 0) parse_fail(li + 1, "count must be positive");

        std::vector<int> ranking;
        std::string token;
        std::istringstream rank_in(line.substr(colon + 1));
        while (std::getline(rank_in, token, ',')) {
            try {
                size_t used = 0;
                const int id = std::stoi(token, &used);
                if (!blank(token.substr(used))) parse_fail(li + 1, "malformed candidate id");
                ranking.push_back(id);
            } catch (const std::invalid_argument&) {
                parse_fail(li + 1, "malformed candidate id");
            }
        }
        if (ranking.empty()) parse_fail(li + 1, "empty ranking");
        for (long long i = 0; i < count; ++i) rows.push_back(ranking);
    }
    if (rows.empty()) throw std::invalid_argument("no ballots in input");
    return validate_profile(rows);
}

std::string emit_profile_soc(const Profile& p) {
    std::ostringstream out;
    out << "# " << p.num_voters << " voters, " << p.num_candidates << " candidates\n";
    for (int v = 0; v < p.num_voters;) {
        int run = 1;
        while (v + run < p.num_voters && p.rankings[v + run] == p.rankings[v]) ++run;
        out << run << ": ";
        for (size_t i = 0; i < p.rankings[v].size(); ++i) {
            if (i) out << ',';
            out << p.rankings[v][i];
        }
        out << '\n';
        v += run;
    }
    return out.str();
}

WeightedTournament parse_tournament(const std::string& text) {
    const auto lines = split_lines(text);
    size_t li = 0;
    while (li < lines.size() && (blank(lines[li]) || lines[li][0] == '#')) ++li;
    if (li >= lines.size()) throw std::invalid_argument("missing candidate count");
    int m = 0;
    {
        std::istringstream in(lines[li]);
        if (!(in >> m) || m < 1) parse_fail(li + 1, "malformed candidate count");
        std::string rest;
        if (in >> rest) parse_fail(li + 1, "trailing tokens after candidate count");
    }
    std::vector<std::vector<long long>> margins(m, std::vector<long long>(m, 0));
    std::vector<std::vector<char>> seen(m, std::vector<char>(m, 0));
    for (++li; li < lines.size(); ++li) {
        if (blank(lines[li]) || lines[li][0] == '#') continue;
        std::istringstream in(lines[li]);
        int c = 0, d = 0;
        long long w = 0;
        if (!(in >> c >> d >> w)) parse_fail(li + 1, "expected `c c' w`");
        std::string rest;
        if (in >> rest) parse_fail(li + 1, "trailing tokens");
        if (c < 1 || c > m || d < 1 || d > m || c == d) parse_fail(li + 1, "candidate id out of range");
        if (w <= 0) parse_fail(li + 1, "weight must be positive");
        if (seen[c - 1][d - 1] || seen[d - 1][c - 1]) parse_fail(li + 1, "duplicate pair");
        seen[c - 1][d - 1] = seen[d - 1][c - 1] = 1;
        margins[c - 1][d - 1] = w;
        margins[d - 1][c - 1] = -w;
    }
    return WeightedTournament::from_margins(margins);
}

MisrepMatrix parse_misrep(const std::string& text) {
    const auto lines = split_lines(text);
    std::vector<std::vector<std::pair<long long, int>>> raw;  // (digits value, decimals)
    int max_decimals = 0;
    for (size_t li = 0; li < lines.size(); ++li) {
        if (blank(lines[li]) || lines[li][0] == '#') continue;
        std::istringstream in(lines[li]);
        std::string token;
        std::vector<std::pair<long long, int>> row;
        while (in >> token) {
            // accept integers and plain decimals; anything else is rejected
            bool negative = false;
            size_t pos = 0;
            if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
                negative = token[pos] == '-';
                ++pos;
            }
            long long digits = 0;
            int decimals = -1;
            bool any_digit = false;
            for (; pos < token.size(); ++pos) {
                if (token[pos] == '.') {
                    if (decimals >= 0) parse_fail(li + 1, "malformed value `" + token + "`");
                    decimals = 0;
                } else if (std::isdigit(static_cast<unsigned char>(token[pos]))) {
                    digits = digits * 10 + (token[pos] - '0');
                    if (decimals >= 0) ++decimals;
                    any_digit = true;
                } else {
                    parse_fail(li + 1, "non-decimal value `" + token + "`");
                }
            }
            if (!any_digit) parse_fail(li + 1, "malformed value `" + token + "`");
            if (decimals < 0) decimals = 0;
            max_decimals = std::max(max_decimals, decimals);
            row.emplace_back(negative ? -digits : digits, decimals);
        }
        if (!row.empty()) raw.push_back(std::move(row));
    }
    if (raw.empty()) throw std::invalid_argument("empty misrepresentation table");
    const size_t m = raw[0].size();
    MisrepMatrix rho;
    rho.num_voters = static_cast<int>(raw.size());
    rho.num_candidates = static_cast<int>(m);
    rho.provenance = MisrepMatrix::Provenance::Custom;
    for (size_t v = 0; v < raw.size(); ++v) {
        if (raw[v].size() != m) {
            throw std::invalid_argument("misrepresentation rows have unequal length");
        }
        std::vector<long long> row;
        for (auto [value, decimals] : raw[v]) {
            long long scaled = value;
            for (int d = decimals; d < max_decimals; ++d) scaled *= 10;
            row.push_back(scaled);
        }
        rho.values.push_back(std::move(row));
    }
    return rho;
}

nlohmann::json ResultDocument::to_json() const {
    return nlohmann::json{{"command", command},
                          {"input_digest", input_digest},
                          {"status", status},
                          {"result", result}};
}

ResultDocument ResultDocument::from_json(const nlohmann::json& j) {
    ResultDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.input_digest = j.at("input_digest").get<std::string>();
    doc.status = j.at("status").get<std::string>();
    doc.result = j.at("result");
    return doc;
}

std::string content_digest(const std::string& text) {
    // FNV-1a, reported as hex
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace twocross
