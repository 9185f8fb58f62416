// mr_chain.hpp - Exact multi-resolution saturation analysis.
//
// Two user types share m1 base-layer drives and m2 refinement (or coded)
// drives; each drive streams layer_slots layers concurrently.  State (i, j)
// counts Type 1 (base only) and Type 2 (base + refinement) users.  The
// admission region is a trapezoid j <= M_i, with M_i set by the scheme's
// bandwidth constraints:
//
//   urs:  i + j <= m1*slots,  j <= m2*slots,  i + 2j <= (m1+m2)*slots
//   crs:  i     <= m1*slots,  j <= m2*slots,  i + 2j <= (m1+m2)*slots
//
// Coded drives can serve either degree of freedom of a Type 2 request, which
// is why CRS drops the (i+j) coupling and dominates URS.  The classical
// non-resolution-aware layout has no shared region; its saturation
// probability is a product of two Erlang-B terms.
//
// M_i is always derived from the raw inequalities in integer arithmetic; the
// compact min-forms divide m1+m2 by two and are only meaningful for even
// sums (the tests check them against the raw boundary).
//
// The chain (arrivals lambda1/lambda2, departures i*mu / j*mu) is solved for
// steady state by a direct sparse LU factorization of the global balance
// equations; paper-scale configurations stay below a few thousand states.

#ifndef SANCAP_MR_CHAIN_HPP
#define SANCAP_MR_CHAIN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "sancap/erlang.hpp"

namespace sancap {

enum class MrScheme { classical, urs, crs };

inline const char* to_string(MrScheme s) {
    switch (s) {
        case MrScheme::classical: return "classical";
        case MrScheme::urs: return "urs";
        case MrScheme::crs: return "crs";
    }
    return "?";
}

struct MrConfig {
    std::int64_t base_drives = 1;        // m1
    std::int64_t refinement_drives = 1;  // m2 (0 allowed: no refinement capacity)
    std::int64_t layer_slots = 1;        // floor(B/B0), layers one drive streams
    double lambda1 = 1.0;                // Type 1 arrival rate
    double lambda2 = 1.0;                // Type 2 arrival rate
    double mu = 1.0;                     // per-user service rate
    MrScheme scheme = MrScheme::urs;
    // Halve the Type 2 departure rate (j*mu/2) in the urs/crs chains, the
    // convention the classical closed form uses for double-sized files.
    // Default off: the chain transitions natively use rate j*mu.
    bool type2_half_rate = false;

    void validate() const {
        if (base_drives < 1) throw std::invalid_argument("MrConfig: base_drives must be >= 1");
        if (refinement_drives < 0)
            throw std::invalid_argument("MrConfig: refinement_drives must be >= 0");
        if (layer_slots < 1) throw std::invalid_argument("MrConfig: layer_slots must be >= 1");
        if (!(lambda1 >= 0.0) || !std::isfinite(lambda1))
            throw std::invalid_argument("MrConfig: lambda1 must be finite and >= 0");
        if (!(lambda2 >= 0.0) || !std::isfinite(lambda2))
            throw std::invalid_argument("MrConfig: lambda2 must be finite and >= 0");
        if (lambda1 + lambda2 <= 0.0)
            throw std::invalid_argument("MrConfig: need a positive arrival rate");
        if (!(mu > 0.0) || !std::isfinite(mu))
            throw std::invalid_argument("MrConfig: mu must be finite and > 0");
    }
};

// K1: most Type 1 users the system ever admits (j = 0 in the first constraint).
inline std::int64_t max_type1(const MrConfig& cfg) { return cfg.base_drives * cfg.layer_slots; }

namespace detail {

inline std::int64_t floor_div2(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace detail

// M_i^U: largest j admissible with i Type 1 users under urs.
inline std::int64_t boundary_urs(const MrConfig& cfg, std::int64_t i) {
    cfg.validate();
    if (i < 0 || i > max_type1(cfg)) throw std::invalid_argument("boundary_urs: i out of range");
    const std::int64_t slots = cfg.layer_slots;
    const std::int64_t by_base = cfg.base_drives * slots - i;
    const std::int64_t by_refine = cfg.refinement_drives * slots;
    const std::int64_t by_total =
        detail::floor_div2((cfg.base_drives + cfg.refinement_drives) * slots - i);
    return std::min(by_base, std::min(by_refine, by_total));
}

// M_i^C: same with the Type-1/Type-2 base coupling dropped.
inline std::int64_t boundary_crs(const MrConfig& cfg, std::int64_t i) {
    cfg.validate();
    if (i < 0 || i > max_type1(cfg)) throw std::invalid_argument("boundary_crs: i out of range");
    const std::int64_t slots = cfg.layer_slots;
    const std::int64_t by_refine = cfg.refinement_drives * slots;
    const std::int64_t by_total =
        detail::floor_div2((cfg.base_drives + cfg.refinement_drives) * slots - i);
    return std::min(by_refine, by_total);
}

inline std::int64_t boundary(const MrConfig& cfg, std::int64_t i) {
    switch (cfg.scheme) {
        case MrScheme::urs: return boundary_urs(cfg, i);
        case MrScheme::crs: return boundary_crs(cfg, i);
        default: throw std::invalid_argument("boundary: classical scheme has no (i,j) chain");
    }
}

struct MrState {
    std::int64_t type1 = 0;  // i
    std::int64_t type2 = 0;  // j
    friend bool operator==(const MrState&, const MrState&) = default;
};

// Enumerated admission region with per-state blocking/saturation markers.
struct StateSpace {
    std::vector<MrState> states;            // row-major: i ascending, then j
    std::vector<std::int64_t> boundary;     // M_i for i in [0, K1]
    std::vector<std::size_t> saturation_set;  // indices of saturated states
    std::int64_t global_max_type1 = 0;      // K1

    std::vector<std::size_t> row_offset;  // index of (i, 0)

    bool feasible(std::int64_t i, std::int64_t j) const {
        return i >= 0 && j >= 0 && i <= global_max_type1 &&
               j <= boundary[static_cast<std::size_t>(i)];
    }
    std::size_t index_of(std::int64_t i, std::int64_t j) const {
        return row_offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j);
    }
    bool type1_blocked(std::int64_t i, std::int64_t j) const { return !feasible(i + 1, j); }
    bool type2_blocked(std::int64_t i, std::int64_t j) const { return !feasible(i, j + 1); }
    bool saturated(std::int64_t i, std::int64_t j) const {
        return type1_blocked(i, j) && type2_blocked(i, j);
    }
};

inline StateSpace build_state_space(const MrConfig& cfg, std::size_t max_states = 1'000'000) {
    cfg.validate();
    StateSpace space;
    space.global_max_type1 = max_type1(cfg);
    space.boundary.reserve(static_cast<std::size_t>(space.global_max_type1) + 1);
    std::size_t count = 0;
    for (std::int64_t i = 0; i <= space.global_max_type1; ++i) {
        const std::int64_t m_i = boundary(cfg, i);
        space.boundary.push_back(m_i);
        count += static_cast<std::size_t>(m_i) + 1;
        if (count > max_states)
            throw std::runtime_error("build_state_space: state count exceeds cap");
    }
    space.states.reserve(count);
    space.row_offset.reserve(space.boundary.size());
    for (std::int64_t i = 0; i <= space.global_max_type1; ++i) {
        space.row_offset.push_back(space.states.size());
        for (std::int64_t j = 0; j <= space.boundary[static_cast<std::size_t>(i)]; ++j)
            space.states.push_back({i, j});
    }
    for (std::size_t idx = 0; idx < space.states.size(); ++idx) {
        const auto& s = space.states[idx];
        if (space.saturated(s.type1, s.type2)) space.saturation_set.push_back(idx);
    }
    return space;
}

struct SteadyState {
    std::vector<double> probabilities;  // aligned with StateSpace::states
    double saturation_probability = 0.0;
};

// Solves pi Q = 0, sum(pi) = 1 by sparse LU on Q^T with one balance equation
// replaced by the normalization row.
inline SteadyState solve_steady_state(const StateSpace& space, const MrConfig& cfg) {
    cfg.validate();
    const std::int64_t n = static_cast<std::int64_t>(space.states.size());
    if (n == 0) throw std::invalid_argument("solve_steady_state: empty state space");
    const double dep2 = cfg.type2_half_rate ? cfg.mu / 2.0 : cfg.mu;

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(5 * n));
    const std::int64_t norm_row = n - 1;  // replaced with sum(pi) = 1

    auto add_entry = [&](std::int64_t row, std::int64_t col, double v) {
        if (row != norm_row) triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), v);
    };

    for (std::int64_t idx = 0; idx < n; ++idx) {
        const auto& s = space.states[static_cast<std::size_t>(idx)];
        double outflow = 0.0;
        auto transition = [&](std::int64_t ti, std::int64_t tj, double rate) {
            if (rate <= 0.0 || !space.feasible(ti, tj)) return;
            outflow += rate;
            // inflow entry: d(pi_target)/dt gains rate * pi_source
            add_entry(static_cast<std::int64_t>(space.index_of(ti, tj)), idx, rate);
        };
        transition(s.type1 + 1, s.type2, cfg.lambda1);
        transition(s.type1, s.type2 + 1, cfg.lambda2);
        transition(s.type1 - 1, s.type2, static_cast<double>(s.type1) * cfg.mu);
        transition(s.type1, s.type2 - 1, static_cast<double>(s.type2) * dep2);
        add_entry(idx, idx, -outflow);
    }
    for (std::int64_t col = 0; col < n; ++col)
        triplets.emplace_back(static_cast<int>(norm_row), static_cast<int>(col), 1.0);

    Eigen::SparseMatrix<double> a(static_cast<int>(n), static_cast<int>(n));
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.analyzePattern(a);
    solver.factorize(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("solve_steady_state: singular balance system");

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs[norm_row] = 1.0;
    const Eigen::VectorXd pi = solver.solve(rhs);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("solve_steady_state: solve failed");

    SteadyState result;
    result.probabilities.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        result.probabilities[static_cast<std::size_t>(k)] = std::max(pi[k], 0.0);
    for (std::size_t idx : space.saturation_set)
        result.saturation_probability += result.probabilities[idx];
    return result;
}

// Closed form for the classical non-resolution-aware layout: independent
// Erlang-B systems for the two user types, Type 2 load doubled because those
// files are twice the size.
inline double classical_saturation(const MrConfig& cfg) {
    cfg.validate();
    const double b1 = erlang_b(cfg.base_drives * cfg.layer_slots, cfg.lambda1 / cfg.mu);
    const double b2 =
        erlang_b(cfg.refinement_drives * cfg.layer_slots, 2.0 * cfg.lambda2 / cfg.mu);
    return b1 * b2;
}

// Exact saturation probability for any scheme.
inline double saturation_probability(const MrConfig& cfg) {
    if (cfg.scheme == MrScheme::classical) return classical_saturation(cfg);
    const StateSpace space = build_state_space(cfg);
    return solve_steady_state(space, cfg).saturation_probability;
}

}  // namespace sancap

#endif  // SANCAP_MR_CHAIN_HPP
