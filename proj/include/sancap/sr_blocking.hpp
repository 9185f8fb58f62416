// sr_blocking.hpp - Analytic file-blocking probability for single-resolution
// striped storage, uncoded (UCS) and network-coded (NCS).
//
// A file of T chunks is striped over s drives; W full copies exist; each
// drive sustains slots_per_drive concurrent streams.  Requests for the chunks
// of one stripe set merge into a single Poisson stream, served by an
// M/G/K/K queue pooled across the W copies.  NCS codes generations of r
// consecutive chunks together, which merges r stripe-set queues into one
// with r times the servers and r times the load.

#ifndef SANCAP_SR_BLOCKING_HPP
#define SANCAP_SR_BLOCKING_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sancap/erlang.hpp"

namespace sancap {

struct SrConfig {
    std::int64_t chunks = 1;           // T, segments per file
    std::int64_t stripe = 1;           // s, drives per file copy
    std::int64_t copies = 1;           // W, full copies stored
    std::int64_t slots_per_drive = 1;  // floor(B/b), streams one drive sustains
    double load = 1.0;                 // rho = lambda/mu per chunk, Erlangs
    std::int64_t generation = 1;       // r, NCS block-window size (UCS ignores)

    void validate() const {
        if (stripe < 1) throw std::invalid_argument("SrConfig: stripe must be >= 1");
        if (chunks < stripe) throw std::invalid_argument("SrConfig: chunks must be >= stripe");
        if (copies < 1) throw std::invalid_argument("SrConfig: copies must be >= 1");
        if (slots_per_drive < 1)
            throw std::invalid_argument("SrConfig: slots_per_drive must be >= 1");
        if (!(load > 0.0) || !std::isfinite(load))
            throw std::invalid_argument("SrConfig: load must be finite and > 0");
        if (generation < 1) throw std::invalid_argument("SrConfig: generation must be >= 1");
        if (generation > stripe)
            throw std::invalid_argument("SrConfig: generation must be <= stripe");
        if (stripe % generation != 0)
            throw std::invalid_argument("SrConfig: generation must divide stripe");
    }
};

// The s stripe sets split into T mod s "long" sets holding ceil(T/s) chunks
// and s - T mod s "short" sets holding floor(T/s); merged request rates are
// the per-chunk load times the chunk count.
struct StripeSetRates {
    std::int64_t long_sets = 0;
    std::int64_t short_sets = 0;
    double long_rate = 0.0;
    double short_rate = 0.0;
};

// K^U: pooled service units per stripe-set queue under UCS.
inline std::int64_t slots_uncoded(const SrConfig& cfg) {
    cfg.validate();
    return cfg.stripe * cfg.slots_per_drive * cfg.copies;
}

// K^C = r K^U: service units per merged generation queue under NCS.
inline std::int64_t slots_coded(const SrConfig& cfg) {
    return cfg.generation * slots_uncoded(cfg);
}

inline StripeSetRates stripe_rates(const SrConfig& cfg) {
    cfg.validate();
    const std::int64_t rem = cfg.chunks % cfg.stripe;
    const std::int64_t base = cfg.chunks / cfg.stripe;
    const std::int64_t ceil_chunks = base + (rem > 0 ? 1 : 0);  // ceil(T/s)
    StripeSetRates rates;
    rates.long_sets = rem;
    rates.short_sets = cfg.stripe - rem;
    rates.long_rate = cfg.load * static_cast<double>(ceil_chunks);
    rates.short_rate = cfg.load * static_cast<double>(base);
    return rates;
}

namespace detail {

// 1 - prod(1 - B_g)^{n_g} over the independent per-group queues, accumulated
// through log1p/expm1 so results near 1e-12 keep relative accuracy.
inline double file_blocking(std::int64_t servers, double long_rate, std::int64_t long_sets,
                            double short_rate, std::int64_t short_sets) {
    double log_all_available = 0.0;
    if (long_sets > 0)
        log_all_available +=
            static_cast<double>(long_sets) * std::log1p(-erlang_b(servers, long_rate));
    if (short_sets > 0)
        log_all_available +=
            static_cast<double>(short_sets) * std::log1p(-erlang_b(servers, short_rate));
    return -std::expm1(log_all_available);
}

}  // namespace detail

// P_b^U: probability at least one chunk of the file has no free slot.
inline double ucs_blocking(const SrConfig& cfg) {
    const StripeSetRates r = stripe_rates(cfg);
    return detail::file_blocking(slots_uncoded(cfg), r.long_rate, r.long_sets, r.short_rate,
                                 r.short_sets);
}

// P_b^C: NCS file blocking.  Generations of r chunks merge r stripe-set
// queues into one, so the group counts divide by r; requires r | (T mod s)
// so the decomposition stays integral.  With r = 1 this reduces to
// ucs_blocking bit for bit.
inline double ncs_blocking(const SrConfig& cfg) {
    const StripeSetRates rates = stripe_rates(cfg);
    const std::int64_t r = cfg.generation;
    if (rates.long_sets % r != 0)
        throw std::invalid_argument(
            "ncs_blocking: generation must divide chunks mod stripe (got T mod s = " +
            std::to_string(rates.long_sets) + ", r = " + std::to_string(r) + ")");
    return detail::file_blocking(slots_coded(cfg), static_cast<double>(r) * rates.long_rate,
                                 rates.long_sets / r, static_cast<double>(r) * rates.short_rate,
                                 cfg.stripe / r - rates.long_sets / r);
}

// Sweep-runner policy for r not dividing T mod s: round T up to the next
// multiple of s, which zeroes the remainder.  Returns T unchanged when the
// NCS decomposition is already integral.
inline std::int64_t rounded_chunks(const SrConfig& cfg) {
    cfg.validate();
    const std::int64_t rem = cfg.chunks % cfg.stripe;
    if (rem % cfg.generation == 0) return cfg.chunks;
    return cfg.chunks + (cfg.stripe - rem);
}

}  // namespace sancap

#endif  // SANCAP_SR_BLOCKING_HPP
