#include "waveobs/run_config.hpp"

#include <fstream>
#include <sstream>

namespace waveobs {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

RunConfig RunConfig::from_string(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (cfg.values_.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        cfg.values_[key] = val;
    }
    return cfg;
}

const std::string& RunConfig::raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: missing required key '" + key + "'");
    return it->second;
}

double RunConfig::get_double(const std::string& key) const {
    try {
        size_t used = 0;
        const double v = std::stod(raw(key), &used);
        if (used != raw(key).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not a real number");
    }
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int RunConfig::get_int(const std::string& key) const {
    try {
        size_t used = 0;
        const int v = std::stoi(raw(key), &used);
        if (used != raw(key).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not an integer");
    }
}

int RunConfig::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t RunConfig::get_u64(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    try {
        return std::stoull(raw(key));
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' is not an unsigned integer");
    }
}

std::string RunConfig::get_string(const std::string& key) const { return raw(key); }

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? raw(key) : fallback;
}

std::vector<double> RunConfig::get_list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(raw(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("config: key '" + key + "' has an empty list entry");
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("config: key '" + key + "' has a non-numeric entry '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "' is an empty list");
    return out;
}

std::vector<double> RunConfig::get_list(const std::string& key,
                                        std::vector<double> fallback) const {
    return has(key) ? get_list(key) : fallback;
}

void RunConfig::validate_keys(const std::set<std::string>& allowed) const {
    for (const auto& [k, v] : values_)
        if (!allowed.count(k)) throw ConfigError("config: unknown key '" + k + "'");
}

} // namespace waveobs
