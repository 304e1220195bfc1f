#pragma once

// Plain key=value configuration: budget caps, cache directory, thread count.
// Flags override config values; the BRUHAT_CONFIG environment variable
// overrides the default path ./bruhat.conf.

#include "bruhat/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

namespace bruhat {

struct Config {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline Config load_config_file(const std::string& path) {
    Config cfg;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError("bad config line " + std::to_string(lineno) + ": " + t);
        cfg.values[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return cfg;
}

// Env var path wins; otherwise ./bruhat.conf if present; otherwise empty.
inline Config load_default_config() {
    if (const char* env = std::getenv("BRUHAT_CONFIG")) return load_config_file(env);
    std::ifstream probe("bruhat.conf");
    if (probe.good()) return load_config_file("bruhat.conf");
    return {};
}

} // namespace bruhat
