// allocation.hpp - Optimal base/refinement drive split under a weighted
// per-type blocking cost.
//
// With m = m1 + m2 fixed, scan every integer m2, evaluate Type 1 and Type 2
// blocking from the exact steady state (PASTA: Poisson arrivals see time
// averages), and minimize P_b1 + c * P_b2.  urs restricts m2 <= m1 so all
// refinement bandwidth stays usable; crs and classical scan the full range.
//
// Classical candidates follow the storage-normalized layout: a budget of m2
// drives stores dual-layer (base + refinement) copies, and since each such
// copy is twice the size, only floor(m2/2) physical dual-layer drives exist.
// Their pool serves Type 2 at doubled load (double-sized files, halved
// service rate), independent of the Type 1 pool.

#ifndef SANCAP_ALLOCATION_HPP
#define SANCAP_ALLOCATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sancap/mr_chain.hpp"

namespace sancap {

struct PerTypeBlocking {
    double type1 = 0.0;  // P_b^1
    double type2 = 0.0;  // P_b^2
};

// Steady-state blocking probability per arrival type for the urs/crs chains:
// P_b^a is the probability mass of states where a Type a arrival is rejected.
inline PerTypeBlocking per_type_blocking(const MrConfig& cfg) {
    if (cfg.scheme == MrScheme::classical)
        throw std::invalid_argument("per_type_blocking: use the classical closed form");
    const StateSpace space = build_state_space(cfg);
    const SteadyState steady = solve_steady_state(space, cfg);
    PerTypeBlocking blocking;
    for (std::size_t idx = 0; idx < space.states.size(); ++idx) {
        const auto& s = space.states[idx];
        const double p = steady.probabilities[idx];
        if (space.type1_blocked(s.type1, s.type2)) blocking.type1 += p;
        if (space.type2_blocked(s.type1, s.type2)) blocking.type2 += p;
    }
    return blocking;
}

struct AllocationProblem {
    std::int64_t total_drives = 12;  // m = m1 + m2
    double cost_weight = 1.0;        // c
    double lambda_ratio = 5.0;       // lambda1 / lambda2
    double total_load = 6.0;         // (lambda1 + lambda2) / mu
    std::int64_t layer_slots = 2;
    MrScheme scheme = MrScheme::crs;
    bool type2_half_rate = false;

    void validate() const {
        if (total_drives < 2) throw std::invalid_argument("AllocationProblem: need >= 2 drives");
        if (!(cost_weight > 0.0)) throw std::invalid_argument("AllocationProblem: c must be > 0");
        if (!(lambda_ratio > 0.0))
            throw std::invalid_argument("AllocationProblem: lambda_ratio must be > 0");
        if (!(total_load > 0.0) || !std::isfinite(total_load))
            throw std::invalid_argument("AllocationProblem: total_load must be finite and > 0");
        if (layer_slots < 1)
            throw std::invalid_argument("AllocationProblem: layer_slots must be >= 1");
    }

    // Concrete configuration for a candidate split; mu normalized to 1.
    MrConfig config_for(std::int64_t m2) const {
        MrConfig cfg;
        cfg.base_drives = total_drives - m2;
        cfg.refinement_drives = m2;
        cfg.layer_slots = layer_slots;
        cfg.mu = 1.0;
        cfg.lambda2 = total_load / (1.0 + lambda_ratio);
        cfg.lambda1 = cfg.lambda2 * lambda_ratio;
        cfg.scheme = scheme;
        cfg.type2_half_rate = type2_half_rate;
        return cfg;
    }
};

struct CandidateEval {
    std::int64_t m2 = 0;
    double cost = 0.0;
    PerTypeBlocking blocking;
    double saturation = 0.0;  // P_s at this split
};

inline CandidateEval evaluate_allocation(const AllocationProblem& problem, std::int64_t m2) {
    problem.validate();
    const MrConfig cfg = problem.config_for(m2);
    CandidateEval eval;
    eval.m2 = m2;
    if (problem.scheme == MrScheme::classical) {
        const std::int64_t dual_drives = m2 / 2;  // m2 drive-budget, double-sized copies
        eval.blocking.type1 = erlang_b(cfg.base_drives * cfg.layer_slots, cfg.lambda1 / cfg.mu);
        eval.blocking.type2 =
            erlang_b(dual_drives * cfg.layer_slots, 2.0 * cfg.lambda2 / cfg.mu);
        eval.saturation = eval.blocking.type1 * eval.blocking.type2;
    } else {
        const StateSpace space = build_state_space(cfg);
        const SteadyState steady = solve_steady_state(space, cfg);
        for (std::size_t idx = 0; idx < space.states.size(); ++idx) {
            const auto& s = space.states[idx];
            const double p = steady.probabilities[idx];
            if (space.type1_blocked(s.type1, s.type2)) eval.blocking.type1 += p;
            if (space.type2_blocked(s.type1, s.type2)) eval.blocking.type2 += p;
        }
        eval.saturation = steady.saturation_probability;
    }
    eval.cost = eval.blocking.type1 + problem.cost_weight * eval.blocking.type2;
    return eval;
}

// Feasible m2 range: [1, m-1], further capped at m2 <= m1 for urs.
inline std::pair<std::int64_t, std::int64_t> feasible_m2_range(const AllocationProblem& problem) {
    problem.validate();
    std::int64_t hi = problem.total_drives - 1;
    if (problem.scheme == MrScheme::urs) hi = std::min(hi, problem.total_drives / 2);
    if (hi < 1) throw std::invalid_argument("feasible_m2_range: empty range");
    return {1, hi};
}

struct AllocationResult {
    std::int64_t best_m2 = 0;
    double cost = 0.0;
    PerTypeBlocking blocking;
    double saturation_at_optimum = 0.0;
};

// Exhaustive scan; ties break toward the smallest m2.
inline AllocationResult optimize(const AllocationProblem& problem) {
    const auto [lo, hi] = feasible_m2_range(problem);
    AllocationResult best;
    bool have = false;
    for (std::int64_t m2 = lo; m2 <= hi; ++m2) {
        const CandidateEval eval = evaluate_allocation(problem, m2);
        if (!have || eval.cost < best.cost) {
            best.best_m2 = eval.m2;
            best.cost = eval.cost;
            best.blocking = eval.blocking;
            best.saturation_at_optimum = eval.saturation;
            have = true;
        }
    }
    return best;
}

}  // namespace sancap

#endif  // SANCAP_ALLOCATION_HPP
