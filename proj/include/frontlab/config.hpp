#pragma once

#include <map>
#include <string>
#include <vector>

namespace frontlab {

/// Flat sectioned key = value text:
///   # comment
///   [section]
///   key = value
/// Consumers declare their schema per section; unknown keys are rejected so
/// that typos cannot silently fall back to defaults.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get_str(const std::string& section, const std::string& key,
                        const std::string& fallback) const;
    std::string require_str(const std::string& section, const std::string& key) const;
    double get_num(const std::string& section, const std::string& key, double fallback) const;
    double require_num(const std::string& section, const std::string& key) const;
    long get_int(const std::string& section, const std::string& key, long fallback) const;

    /// Throws ConfigError naming the first key in `section` not listed in
    /// `allowed` (and complains about unknown sections via validate_sections).
    void validate_keys(const std::string& section,
                       const std::vector<std::string>& allowed) const;
    void validate_sections(const std::vector<std::string>& allowed) const;

    /// Canonical serialized form (sorted), used for provenance hashing.
    std::string canonical() const;
    /// FNV-1a hash of the canonical form, hex encoded.
    std::string hash() const;

    bool empty() const { return data_.empty(); }

private:
    std::map<std::string, std::map<std::string, std::string>> data_;
};

}  // namespace frontlab
