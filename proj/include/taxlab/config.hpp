#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace taxlab {

// INI-style configuration: `[section]` headers, `key = value` lines,
// `#` or `;` comments. Keys are addressed as "section.key".
class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_string(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    long get_long(const std::string& key, long def) const;
    bool get_bool(const std::string& key, bool def) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    // Sorted key=value dump; the basis for config fingerprints.
    std::string canonical() const;
    std::uint64_t fingerprint() const;

private:
    std::map<std::string, std::string> values_;
};

} // namespace taxlab
