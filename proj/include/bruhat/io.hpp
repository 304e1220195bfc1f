#pragma once

// Serialization: JSON (nlohmann), line-oriented text, and RFC-4180 CSV.
// Polynomial coefficients serialize as JSON integers while they fit in 64
// bits and as decimal strings beyond that.

#include "bruhat/descent_systems.hpp"
#include "bruhat/genfun.hpp"
#include "bruhat/levels.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"
#include "bruhat/search.hpp"

#include "json.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace bruhat {

using nlohmann::json;

inline json json_of(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

inline json json_of(const Permutation& p) { return to_string(p); }

inline json json_of(const GeneratorSet& g) { return g.indices(); }

inline json json_of(const IntPolynomial& f) {
    json arr = json::array();
    for (int k = 0; k <= f.degree(); ++k) arr.push_back(json_of(f.coeff(k)));
    return arr;
}

inline json json_of(const SetSystem& s) {
    json sets = json::array();
    for (std::uint32_t mask : s.sets) sets.push_back(mask_elements(mask));
    return json{{"ground_size", s.ground_size}, {"sets", sets}};
}

inline json json_of(const PermFamily& fam) {
    json members = json::array();
    for (const Permutation& p : fam.members) members.push_back(to_string(p));
    return json{{"n", fam.n}, {"size", fam.size()}, {"members", members}};
}

inline json json_of(const LevelEnumeration& lev) {
    json items = json::array();
    for (const Permutation& p : lev.items) items.push_back(to_string(p));
    return json{{"n", lev.n},
                {"ell", lev.ell},
                {"count", static_cast<long long>(lev.items.size())},
                {"items", items}};
}

inline json json_of(const SearchOutcome& o) {
    json j{{"problem", o.problem},
           {"optimum", o.optimum},
           {"is_star", o.is_star},
           {"optimal", o.optimal},
           {"nodes", o.nodes},
           {"elapsed_ms", o.elapsed_ms}};
    if (o.perm_witness) j["witness"] = json_of(*o.perm_witness);
    if (o.set_witness) j["witness"] = json_of(*o.set_witness);
    return j;
}

inline json json_of(const Q63Exploration& q) {
    return json{{"n", q.n},
                {"t", q.t},
                {"id_threshold_size", q.id_threshold_size},
                {"rho_upset_size", q.rho_upset_size},
                {"larger", q.larger}};
}

// --- text helpers ---

// Header + one permutation per line.
inline std::string level_text(const LevelEnumeration& lev) {
    std::ostringstream out;
    out << "n=" << lev.n << " ell=" << lev.ell << " count=" << lev.items.size() << "\n";
    for (const Permutation& p : lev.items) out << to_string(p) << "\n";
    return out.str();
}

// One set per line, comma-separated indices.
inline std::string set_system_text(const SetSystem& s) {
    std::ostringstream out;
    for (std::uint32_t mask : s.sets) {
        bool first = true;
        for (int e : mask_elements(mask)) {
            if (!first) out << ",";
            out << e;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

// RFC-4180 with a mandatory header row.
inline std::string to_csv(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ",";
        out << csv_escape(header[i]);
    }
    out << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << csv_escape(row[i]);
        }
        out << "\r\n";
    }
    return out.str();
}

// Space-padded columns for terminal reports.
inline std::string aligned_table(const std::vector<std::string>& header,
                                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size(), ' ');
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

} // namespace bruhat
