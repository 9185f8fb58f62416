// gf256.hpp - GF(2^8) arithmetic with the x^8+x^4+x^3+x+1 reduction
// polynomial.  Addition is XOR; multiplication goes through compile-time
// log/exp tables built over the generator 0x03.

#ifndef SANCAP_GF256_HPP
#define SANCAP_GF256_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

namespace sancap::gf256 {

inline constexpr int field_size = 256;
inline constexpr std::uint16_t reduction_poly = 0x11B;

constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
constexpr std::uint8_t sub(std::uint8_t a, std::uint8_t b) { return a ^ b; }  // char 2

namespace detail {

// Carry-less shift-and-add multiply with polynomial reduction; only used to
// build the tables below.
constexpr std::uint8_t mul_slow(std::uint8_t a, std::uint8_t b) {
    std::uint16_t acc = 0;
    std::uint16_t aa = a;
    std::uint8_t bb = b;
    while (bb != 0) {
        if (bb & 1u) acc ^= aa;
        aa <<= 1;
        if (aa & 0x100u) aa ^= reduction_poly;
        bb >>= 1;
    }
    return static_cast<std::uint8_t>(acc);
}

struct Tables {
    std::array<std::uint8_t, 510> exp{};
    std::array<std::uint8_t, 256> log{};
};

constexpr Tables build_tables() {
    Tables t{};
    std::uint8_t x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[static_cast<std::size_t>(i)] = x;
        t.exp[static_cast<std::size_t>(i) + 255] = x;
        t.log[x] = static_cast<std::uint8_t>(i);
        x = mul_slow(x, 0x03);  // 0x03 generates the multiplicative group
    }
    return t;
}

inline constexpr Tables tables = build_tables();

}  // namespace detail

constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return detail::tables.exp[static_cast<std::size_t>(detail::tables.log[a]) +
                              detail::tables.log[b]];
}

constexpr std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw std::domain_error("gf256: zero has no inverse");
    return detail::tables.exp[255 - detail::tables.log[a]];
}

constexpr std::uint8_t div(std::uint8_t a, std::uint8_t b) { return mul(a, inv(b)); }

}  // namespace sancap::gf256

#endif  // SANCAP_GF256_HPP
