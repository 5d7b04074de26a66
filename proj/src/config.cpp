#include "frontlab/config.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "frontlab/errors.hpp"

namespace frontlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
            cfg.data_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any [section]");
        auto& sec = cfg.data_[section];
        if (sec.count(key))
            throw ConfigError("duplicate key '" + key + "' in [" + section + "]");
        sec[key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    return it != data_.end() && it->second.count(key) > 0;
}

std::string Config::get_str(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
    auto it = data_.find(section);
    if (it == data_.end()) return fallback;
    auto kt = it->second.find(key);
    return kt == it->second.end() ? fallback : kt->second;
}

std::string Config::require_str(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw ConfigError("missing required key '" + key + "' in [" + section + "]");
    return data_.at(section).at(key);
}

double Config::get_num(const std::string& section, const std::string& key,
                       double fallback) const {
    if (!has(section, key)) return fallback;
    return require_num(section, key);
}

double Config::require_num(const std::string& section, const std::string& key) const {
    const std::string s = require_str(section, key);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' in [" + section + "] is not a number: " + s);
    }
    if (used != s.size())
        throw ConfigError("key '" + key + "' in [" + section + "] has trailing junk: " + s);
    return v;
}

long Config::get_int(const std::string& section, const std::string& key, long fallback) const {
    if (!has(section, key)) return fallback;
    const double v = require_num(section, key);
    const long n = static_cast<long>(v);
    if (static_cast<double>(n) != v)
        throw ConfigError("key '" + key + "' in [" + section + "] must be an integer");
    return n;
}

void Config::validate_keys(const std::string& section,
                           const std::vector<std::string>& allowed) const {
    auto it = data_.find(section);
    if (it == data_.end()) return;
    for (const auto& [key, value] : it->second) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("unknown key '" + key + "' in [" + section + "]");
    }
}

void Config::validate_sections(const std::vector<std::string>& allowed) const {
    for (const auto& [name, keys] : data_) {
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw ConfigError("unknown config section [" + name + "]");
    }
}

std::string Config::canonical() const {
    std::ostringstream os;
    for (const auto& [name, keys] : data_) {
        os << '[' << name << "]\n";
        for (const auto& [key, value] : keys) os << key << " = " << value << '\n';
    }
    return os.str();
}

std::string Config::hash() const {
    const std::string s = canonical();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace frontlab
