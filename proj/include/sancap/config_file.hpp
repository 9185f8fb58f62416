// config_file.hpp - Line-oriented `key = value` parameter files.
// Keys match CLI flag names; blank lines and '#' comments are ignored.
// Parse problems carry the 1-based line number.

#ifndef SANCAP_CONFIG_FILE_HPP
#define SANCAP_CONFIG_FILE_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sancap {

struct ConfigEntry {
    int line = 0;
    std::string key;
    std::string value;
};

class ConfigParseError : public std::runtime_error {
public:
    ConfigParseError(const std::string& path, int line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline bool valid_key(std::string_view key) {
    if (key.empty()) return false;
    for (char c : key) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
        if (!ok) return false;
    }
    return true;
}

}  // namespace detail

inline std::vector<ConfigEntry> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::vector<ConfigEntry> entries;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigParseError(path, line_no, "expected `key = value`");
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (!detail::valid_key(key))
            throw ConfigParseError(path, line_no, "malformed key '" + std::string(key) + "'");
        if (value.empty()) throw ConfigParseError(path, line_no, "missing value");
        entries.push_back({line_no, std::string(key), std::string(value)});
    }
    return entries;
}

}  // namespace sancap

#endif  // SANCAP_CONFIG_FILE_HPP
