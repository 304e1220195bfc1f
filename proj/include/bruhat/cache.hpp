#pragma once

// Result caching for the CLI: one JSON RunRecord per (command, params,
// version) key.  Writes are atomic (temp file + rename) so concurrent runs
// never see a torn record.

#include "bruhat/version.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <unistd.h>

namespace bruhat {

struct RunRecord {
    std::string command;
    nlohmann::json params;
    std::string version;
    std::string timestamp;
    nlohmann::json outcome;

    nlohmann::json to_json() const {
        return nlohmann::json{{"command", command},
                              {"params", params},
                              {"version", version},
                              {"timestamp", timestamp},
                              {"outcome", outcome}};
    }
    static RunRecord from_json(const nlohmann::json& j) {
        return RunRecord{j.value("command", ""), j.value("params", nlohmann::json::object()),
                         j.value("version", ""), j.value("timestamp", ""),
                         j.value("outcome", nlohmann::json())};
    }
};

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Stable key: params serialize with sorted keys, so logically equal runs map
// to the same record.
inline std::string cache_key(const std::string& command, const nlohmann::json& params) {
    return fnv1a_hex(command + "\x1f" + params.dump() + "\x1f" + kVersion);
}

inline std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<nlohmann::json> lookup(const std::string& command,
                                         const nlohmann::json& params) const {
        const auto path = record_path(command, params);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;
        }
        const RunRecord rec = RunRecord::from_json(j);
        if (rec.command != command || rec.version != kVersion || rec.params != params)
            return std::nullopt; // key collision or stale record
        return rec.outcome;
    }

    void store(const std::string& command, const nlohmann::json& params,
               const nlohmann::json& outcome) const {
        namespace fs = std::filesystem;
        fs::create_directories(dir_);
        const RunRecord rec{command, params, kVersion, iso_timestamp(), outcome};
        const auto path = record_path(command, params);
        const auto tmp = path + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << rec.to_json().dump(2) << "\n";
        }
        fs::rename(tmp, path);
    }

private:
    std::string dir_;

    std::string record_path(const std::string& command,
                            const nlohmann::json& params) const {
        return dir_ + "/" + command + "-" + cache_key(command, params) + ".json";
    }
};

} // namespace bruhat
