// mr_sim.hpp - Monte-Carlo CTMC simulator for urs/crs saturation probability.
//
// Competing exponential clocks drive the (i, j) process: arrivals fire at
// lambda1/lambda2 regardless of state and are discarded when the boundary
// would be violated; departures fire at i*mu and j*mu.  P_s is estimated as
// the fraction of simulated time spent in saturated states (time averaging is
// the consistent estimator for CTMC occupancy; event counting is not).
//
// All randomness is derived from explicit mt19937_64 draws so identical plans
// reproduce identical estimates byte for byte, and each replication seeds its
// own stream from (master_seed, replication index) so execution order never
// matters.

#ifndef SANCAP_MR_SIM_HPP
#define SANCAP_MR_SIM_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "sancap/mr_chain.hpp"

namespace sancap {

struct SimPlan {
    MrConfig config;
    std::int64_t warmup_events = 0;
    std::int64_t measured_events = 1;
    std::int64_t replications = 1;
    std::uint64_t master_seed = 1;

    void validate() const {
        config.validate();
        if (config.scheme == MrScheme::classical)
            throw std::invalid_argument("SimPlan: classical scheme has no chain to simulate");
        if (warmup_events < 0) throw std::invalid_argument("SimPlan: warmup_events must be >= 0");
        if (measured_events < 1)
            throw std::invalid_argument("SimPlan: measured_events must be >= 1");
        if (replications < 1) throw std::invalid_argument("SimPlan: replications must be >= 1");
    }
};

struct SimEstimate {
    double p_s_mean = 0.0;
    double std_error = 0.0;
    std::vector<double> per_replication;
    bool time_weighted = true;
};

namespace detail {

// splitmix64; decorrelates per-replication seeds from the master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform in (0, 1]; explicit mapping so results do not depend on the
// standard library's distribution implementations.
inline double uniform_unit(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

inline double exponential(std::mt19937_64& rng, double rate) {
    return -std::log(uniform_unit(rng)) / rate;
}

inline double run_replication(const StateSpace& space, const MrConfig& cfg,
                              std::int64_t warmup_events, std::int64_t measured_events,
                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double dep2_rate = cfg.type2_half_rate ? cfg.mu / 2.0 : cfg.mu;
    std::int64_t i = 0, j = 0;
    double measured_time = 0.0;
    double saturated_time = 0.0;
    const std::int64_t total_events = warmup_events + measured_events;
    for (std::int64_t event = 0; event < total_events; ++event) {
        assert(space.feasible(i, j));
        const double rate_i = static_cast<double>(i) * cfg.mu;
        const double rate_j = static_cast<double>(j) * dep2_rate;
        const double total_rate = cfg.lambda1 + cfg.lambda2 + rate_i + rate_j;
        const double dwell = exponential(rng, total_rate);
        if (event >= warmup_events) {
            measured_time += dwell;
            if (space.saturated(i, j)) saturated_time += dwell;
        }
        const double pick = uniform_unit(rng) * total_rate;
        if (pick < cfg.lambda1) {
            if (space.feasible(i + 1, j)) ++i;  // else blocked, discarded
        } else if (pick < cfg.lambda1 + cfg.lambda2) {
            if (space.feasible(i, j + 1)) ++j;
        } else if (pick < cfg.lambda1 + cfg.lambda2 + rate_i) {
            --i;
        } else {
            --j;
        }
    }
    return saturated_time / measured_time;
}

}  // namespace detail

inline SimEstimate simulate(const SimPlan& plan) {
    plan.validate();
    const StateSpace space = build_state_space(plan.config);
    SimEstimate estimate;
    estimate.per_replication.resize(static_cast<std::size_t>(plan.replications));
    for (std::int64_t rep = 0; rep < plan.replications; ++rep) {
        const std::uint64_t seed =
            detail::mix_seed(plan.master_seed, static_cast<std::uint64_t>(rep));
        estimate.per_replication[static_cast<std::size_t>(rep)] = detail::run_replication(
            space, plan.config, plan.warmup_events, plan.measured_events, seed);
    }
    double sum = 0.0;
    for (double v : estimate.per_replication) sum += v;
    const double n = static_cast<double>(plan.replications);
    estimate.p_s_mean = sum / n;
    if (plan.replications > 1) {
        double ss = 0.0;
        for (double v : estimate.per_replication) {
            const double d = v - estimate.p_s_mean;
            ss += d * d;
        }
        estimate.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return estimate;
}

// One estimate per lambda/mu grid point with symmetric arrivals
// (lambda1 = lambda2 = load * mu / 2), the server-load sweep.
inline std::vector<SimEstimate> sweep_load(const SimPlan& base,
                                           std::span<const double> load_grid) {
    std::vector<SimEstimate> results;
    results.reserve(load_grid.size());
    for (double load : load_grid) {
        if (!(load > 0.0)) throw std::invalid_argument("sweep_load: loads must be > 0");
        SimPlan plan = base;
        plan.config.lambda1 = load * base.config.mu / 2.0;
        plan.config.lambda2 = plan.config.lambda1;
        results.push_back(simulate(plan));
    }
    return results;
}

}  // namespace sancap

#endif  // SANCAP_MR_SIM_HPP
