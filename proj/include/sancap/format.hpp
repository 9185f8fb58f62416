// format.hpp - Deterministic number serialization for CSV and stdout.
// Shortest decimal that round-trips the exact double (std::to_chars), so
// values like 0.5 print as "0.5" and no information is lost on re-parse.

#ifndef SANCAP_FORMAT_HPP
#define SANCAP_FORMAT_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>

namespace sancap {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace sancap

#endif  // SANCAP_FORMAT_HPP
