#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace waveobs {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plain key=value configuration, one entry per line, '#' starts a comment.
/// Every tunable arrives as text and is validated against the consuming
/// subcommand's key set before any computation runs.
class RunConfig {
public:
    RunConfig() = default;
    static RunConfig from_file(const std::string& path);
    static RunConfig from_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    /// Comma-separated list of reals, e.g. omega = 0.5,1.5 or f = -1,0,1.
    std::vector<double> get_list(const std::string& key) const;
    std::vector<double> get_list(const std::string& key, std::vector<double> fallback) const;

    /// Overrides (e.g. --seed, --out) take precedence over file entries.
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    /// Rejects any key outside the allowed set.
    void validate_keys(const std::set<std::string>& allowed) const;

private:
    std::map<std::string, std::string> values_;

    const std::string& raw(const std::string& key) const;
};

} // namespace waveobs
