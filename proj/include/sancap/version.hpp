#ifndef SANCAP_VERSION_HPP
#define SANCAP_VERSION_HPP

namespace sancap {

inline constexpr const char* version = "0.1.0";

}  // namespace sancap

#endif  // SANCAP_VERSION_HPP
