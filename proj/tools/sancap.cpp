// sancap - capacity planning for coded vs. uncoded storage-area-network
// layouts: Erlang-B evaluation, single-resolution blocking sweeps,
// multi-resolution saturation (exact chain solve and Monte-Carlo), drive
// allocation optimization, and preconfigured figure reproductions.
//
// Every command accepts `--config <file>` with line-oriented `key = value`
// pairs whose keys are the command's flag names; command-line flags override
// file values.  Commands that write CSV also write a `<name>.manifest.json`
// recording the resolved parameters, sufficient to reproduce the output byte
// for byte.
//
// Exit codes: 0 success, 2 invalid arguments or config, 3 unwritable output.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sancap/allocation.hpp"
#include "sancap/config_file.hpp"
#include "sancap/erlang.hpp"
#include "sancap/format.hpp"
#include "sancap/mr_chain.hpp"
#include "sancap/mr_sim.hpp"
#include "sancap/rlnc.hpp"
#include "sancap/sr_blocking.hpp"
#include "sancap/version.hpp"

namespace {

using nlohmann::json;
using namespace sancap;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_output = 3;

struct WriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown after help text has already been printed.
struct HelpShown {};

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw WriteError("cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw WriteError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw WriteError("write failed for " + path.string());
}

// Manifest alongside each CSV-producing command.  `parameters` is exactly the
// resolved flag set: replaying `<command> --key value ...` reproduces the
// outputs byte for byte.  `derived` records values computed from them.
void write_manifest(const std::filesystem::path& out_path, const std::string& command,
                    const json& parameters, const std::vector<std::string>& outputs,
                    const json& derived = json::object()) {
    json manifest;
    manifest["tool"] = "sancap";
    manifest["version"] = sancap::version;
    manifest["command"] = command;
    manifest["parameters"] = parameters;
    if (!derived.empty()) manifest["derived"] = derived;
    manifest["outputs"] = outputs;
    write_file(out_path, manifest.dump(2) + "\n");
}

class CsvBuilder {
public:
    explicit CsvBuilder(std::string header) : text_(std::move(header)) { text_ += '\n'; }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) text_ += ',';
            text_ += cells[k];
        }
        text_ += '\n';
    }
    const std::string& text() const { return text_; }

private:
    std::string text_;
};

// --- config-file merge -------------------------------------------------
//
// Strategy: collect the command's long flag names, validate the file's keys
// against them (with the line number on error), then feed the file pairs
// before the user's own flags with take-last semantics, so the command line
// wins.

std::set<std::string> option_keys(const CLI::App& app) {
    std::set<std::string> keys;
    for (const CLI::Option* opt : app.get_options()) {
        for (const std::string& name : opt->get_lnames()) keys.insert(name);
    }
    keys.erase("config");
    keys.erase("help");
    return keys;
}

bool truthy(const std::string& v) { return v == "1" || v == "true" || v == "yes" || v == "on"; }

void parse_command_line(CLI::App& app, const std::vector<std::string>& user_args,
                        const std::set<std::string>& flag_names) {
    for (CLI::Option* opt : app.get_options()) {
        if (opt->get_expected_min() > 0)
            opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    // Locate --config among the user's args first.
    std::string config_path;
    for (std::size_t k = 0; k + 1 < user_args.size(); ++k)
        if (user_args[k] == "--config") config_path = user_args[k + 1];

    std::vector<std::string> effective;
    if (!config_path.empty()) {
        const std::set<std::string> known = option_keys(app);
        for (const ConfigEntry& entry : parse_config_file(config_path)) {
            if (!known.contains(entry.key))
                throw ConfigParseError(config_path, entry.line,
                                       "unknown key '" + entry.key + "'");
            if (flag_names.contains(entry.key)) {
                if (truthy(entry.value)) effective.push_back("--" + entry.key);
            } else {
                effective.push_back("--" + entry.key);
                effective.push_back(entry.value);
            }
        }
    }
    effective.insert(effective.end(), user_args.begin(), user_args.end());

    std::reverse(effective.begin(), effective.end());  // CLI11 wants reversed args
    try {
        app.parse(std::move(effective));
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        throw HelpShown{};
    }
}

// --- erlang -------------------------------------------------------------

int run_erlang(const std::vector<std::string>& args) {
    CLI::App app{"Erlang-B blocking probability", "sancap erlang"};
    std::int64_t servers = 1;
    double rho = 1.0;
    std::string config, out;
    app.add_option("--K", servers, "service units")->capture_default_str();
    app.add_option("--rho", rho, "offered load in Erlangs")->capture_default_str();
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "also write the result to this file");
    parse_command_line(app, args, {});

    const double b = erlang_b(LossSystem{servers, rho});
    const std::string text = format_double(b) + "\n";
    std::cout << text;
    if (!out.empty()) write_file(out, text);
    return exit_ok;
}

// --- sr-sweep -----------------------------------------------------------

std::string sr_sweep_csv(const std::string& scheme, std::int64_t s, std::int64_t chunks,
                         std::int64_t slots, double rho, std::int64_t r, std::int64_t w_min,
                         std::int64_t w_max) {
    const bool coded = scheme == "ncs";
    CsvBuilder csv("scheme,s,T_effective,slots,rho,r,W,P_b");
    const std::int64_t r_eff = coded ? r : 1;
    SrConfig probe{chunks, s, 1, slots, rho, r_eff};
    const std::int64_t t_eff = rounded_chunks(probe);
    for (std::int64_t w = w_min; w <= w_max; ++w) {
        SrConfig cfg{t_eff, s, w, slots, rho, r_eff};
        const double pb = coded ? ncs_blocking(cfg) : ucs_blocking(cfg);
        csv.row({scheme, format_int(s), format_int(t_eff), format_int(slots), format_double(rho),
                 format_int(r_eff), format_int(w), format_double(pb)});
    }
    return csv.text();
}

int run_sr_sweep(const std::vector<std::string>& args) {
    CLI::App app{"UCS/NCS blocking probability vs. copy count", "sancap sr-sweep"};
    std::string scheme = "ucs", config, out = "sr_sweep.csv";
    std::int64_t s = 2, chunks = 150, slots = 2, r = 2, w_min = 1, w_max = 30;
    double rho = 0.2;
    app.add_option("--scheme", scheme)->check(CLI::IsMember({"ucs", "ncs"}))
        ->capture_default_str();
    app.add_option("--s", s, "stripe width")->capture_default_str();
    app.add_option("--T", chunks, "chunks per file")->capture_default_str();
    app.add_option("--slots", slots, "streams per drive")->capture_default_str();
    app.add_option("--rho", rho, "per-chunk load")->capture_default_str();
    app.add_option("--r", r, "generation size (ncs)")->capture_default_str();
    app.add_option("--w-min", w_min)->capture_default_str();
    app.add_option("--w-max", w_max)->capture_default_str();
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "output CSV path")->capture_default_str();
    parse_command_line(app, args, {});
    if (w_min < 1 || w_max < w_min)
        throw CLI::ValidationError("--w-min/--w-max", "need 1 <= w-min <= w-max");

    write_file(out, sr_sweep_csv(scheme, s, chunks, slots, rho, r, w_min, w_max));
    json params{{"scheme", scheme}, {"s", s},          {"T", chunks},  {"slots", slots},
                {"rho", rho},       {"r", r},          {"w-min", w_min}, {"w-max", w_max},
                {"out", out}};
    const std::int64_t r_eff = scheme == "ncs" ? r : 1;
    json derived{{"T_effective", rounded_chunks(SrConfig{chunks, s, 1, slots, rho, r_eff})}};
    write_manifest(out + ".manifest.json", "sr-sweep", params, {out}, derived);
    return exit_ok;
}

// --- mr-exact -----------------------------------------------------------

struct MrExactRow {
    double ps = 0, pb1 = 0, pb2 = 0;
    std::int64_t states = 0, k1 = 0, m0 = 0;
};

MrExactRow mr_exact_row(const MrConfig& cfg) {
    MrExactRow row;
    if (cfg.scheme == MrScheme::classical) {
        row.ps = classical_saturation(cfg);
        row.pb1 = erlang_b(cfg.base_drives * cfg.layer_slots, cfg.lambda1 / cfg.mu);
        row.pb2 =
            erlang_b(cfg.refinement_drives * cfg.layer_slots, 2.0 * cfg.lambda2 / cfg.mu);
        row.k1 = cfg.base_drives * cfg.layer_slots;
        row.m0 = cfg.refinement_drives * cfg.layer_slots;
        return row;
    }
    const StateSpace space = build_state_space(cfg);
    const SteadyState steady = solve_steady_state(space, cfg);
    row.ps = steady.saturation_probability;
    for (std::size_t idx = 0; idx < space.states.size(); ++idx) {
        const auto& s = space.states[idx];
        if (space.type1_blocked(s.type1, s.type2)) row.pb1 += steady.probabilities[idx];
        if (space.type2_blocked(s.type1, s.type2)) row.pb2 += steady.probabilities[idx];
    }
    row.states = static_cast<std::int64_t>(space.states.size());
    row.k1 = space.global_max_type1;
    row.m0 = space.boundary.front();
    return row;
}

MrScheme scheme_from_name(const std::string& name) {
    if (name == "classical") return MrScheme::classical;
    if (name == "urs") return MrScheme::urs;
    return MrScheme::crs;
}

int run_mr_exact(const std::vector<std::string>& args) {
    CLI::App app{"Exact multi-resolution saturation analysis", "sancap mr-exact"};
    std::string scheme = "urs", config, out = "mr_exact.csv";
    std::int64_t m1 = 8, m2 = 4, slots = 2;
    double lambda1 = 3.0, lambda2 = 3.0, mu = 1.0;
    bool half_rate = false;
    app.add_option("--scheme", scheme)->check(CLI::IsMember({"classical", "urs", "crs"}))
        ->capture_default_str();
    app.add_option("--m1", m1, "base-layer drives")->capture_default_str();
    app.add_option("--m2", m2, "refinement drives")->capture_default_str();
    app.add_option("--slots", slots, "layer streams per drive")->capture_default_str();
    app.add_option("--lambda1", lambda1)->capture_default_str();
    app.add_option("--lambda2", lambda2)->capture_default_str();
    app.add_option("--mu", mu)->capture_default_str();
    app.add_flag("--type2-half-rate", half_rate, "halve Type 2 departure rate in the chain");
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "output CSV path")->capture_default_str();
    parse_command_line(app, args, {"type2-half-rate"});

    MrConfig cfg{m1, m2, slots, lambda1, lambda2, mu, scheme_from_name(scheme), half_rate};
    const MrExactRow row = mr_exact_row(cfg);
    CsvBuilder csv("scheme,m1,m2,slots,lambda1,lambda2,mu,P_s,P_b1,P_b2,states,K1,M0");
    csv.row({scheme, format_int(m1), format_int(m2), format_int(slots), format_double(lambda1),
             format_double(lambda2), format_double(mu), format_double(row.ps),
             format_double(row.pb1), format_double(row.pb2), format_int(row.states),
             format_int(row.k1), format_int(row.m0)});
    write_file(out, csv.text());
    json params{{"scheme", scheme},   {"m1", m1},           {"m2", m2},
                {"slots", slots},     {"lambda1", lambda1}, {"lambda2", lambda2},
                {"mu", mu},           {"type2-half-rate", half_rate}, {"out", out}};
    write_manifest(out + ".manifest.json", "mr-exact", params, {out});
    return exit_ok;
}

// --- mr-sim -------------------------------------------------------------

int run_mr_sim(const std::vector<std::string>& args) {
    CLI::App app{"Monte-Carlo multi-resolution saturation estimate", "sancap mr-sim"};
    std::string scheme = "urs", config, out = "mr_sim.csv";
    std::int64_t m1 = 8, m2 = 4, slots = 2, events = 100000, warmup = -1, reps = 20;
    double lambda1 = 3.0, lambda2 = 3.0, mu = 1.0;
    std::uint64_t seed = 1;
    bool half_rate = false;
    app.add_option("--scheme", scheme)->check(CLI::IsMember({"urs", "crs"}))
        ->capture_default_str();
    app.add_option("--m1", m1)->capture_default_str();
    app.add_option("--m2", m2)->capture_default_str();
    app.add_option("--slots", slots)->capture_default_str();
    app.add_option("--lambda1", lambda1)->capture_default_str();
    app.add_option("--lambda2", lambda2)->capture_default_str();
    app.add_option("--mu", mu)->capture_default_str();
    app.add_option("--events", events, "measured events per replication")->capture_default_str();
    app.add_option("--warmup", warmup, "warmup events (default events/10)");
    app.add_option("--reps", reps, "replications")->capture_default_str();
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_flag("--type2-half-rate", half_rate);
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "output CSV path")->capture_default_str();
    parse_command_line(app, args, {"type2-half-rate"});
    if (warmup < 0) warmup = events / 10;

    MrConfig cfg{m1, m2, slots, lambda1, lambda2, mu, scheme_from_name(scheme), half_rate};
    SimPlan plan{cfg, warmup, events, reps, seed};
    const SimEstimate est = simulate(plan);
    CsvBuilder csv("scheme,m1,m2,slots,lambda1,lambda2,mu,P_s_mean,std_err,reps,events,seed");
    csv.row({scheme, format_int(m1), format_int(m2), format_int(slots), format_double(lambda1),
             format_double(lambda2), format_double(mu), format_double(est.p_s_mean),
             format_double(est.std_error), format_int(reps), format_int(events),
             std::to_string(seed)});
    write_file(out, csv.text());
    json params{{"scheme", scheme},   {"m1", m1},         {"m2", m2},
                {"slots", slots},     {"lambda1", lambda1}, {"lambda2", lambda2},
                {"mu", mu},           {"events", events}, {"warmup", warmup},
                {"reps", reps},       {"seed", seed},     {"type2-half-rate", half_rate},
                {"out", out}};
    write_manifest(out + ".manifest.json", "mr-sim", params, {out});
    return exit_ok;
}

// --- optimize -----------------------------------------------------------

int run_optimize(const std::vector<std::string>& args) {
    CLI::App app{"Optimal drive split minimizing P_b1 + c*P_b2", "sancap optimize"};
    std::string scheme = "crs", config, out = "optimize.csv";
    std::int64_t m = 12, slots = 2;
    double load = 6.0, lambda_ratio = 5.0, c = 1.0;
    bool half_rate = false;
    app.add_option("--scheme", scheme)->check(CLI::IsMember({"classical", "urs", "crs"}))
        ->capture_default_str();
    app.add_option("--m", m, "total drives")->capture_default_str();
    app.add_option("--slots", slots)->capture_default_str();
    app.add_option("--load", load, "total lambda/mu")->capture_default_str();
    app.add_option("--lambda-ratio", lambda_ratio, "lambda1/lambda2")->capture_default_str();
    app.add_option("--c", c, "Type 2 cost weight")->capture_default_str();
    app.add_flag("--type2-half-rate", half_rate);
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "output CSV path")->capture_default_str();
    parse_command_line(app, args, {"type2-half-rate"});

    AllocationProblem problem{m, c, lambda_ratio, load, slots, scheme_from_name(scheme),
                              half_rate};
    const AllocationResult result = optimize(problem);
    CsvBuilder csv("scheme,m,m2_opt,cost,P_b1,P_b2,P_s");
    csv.row({scheme, format_int(m), format_int(result.best_m2), format_double(result.cost),
             format_double(result.blocking.type1), format_double(result.blocking.type2),
             format_double(result.saturation_at_optimum)});
    write_file(out, csv.text());
    json params{{"scheme", scheme}, {"m", m},
                {"slots", slots},   {"load", load},
                {"lambda-ratio", lambda_ratio}, {"c", c},
                {"type2-half-rate", half_rate}, {"out", out}};
    write_manifest(out + ".manifest.json", "optimize", params, {out});
    return exit_ok;
}

// --- figures ------------------------------------------------------------

struct SrFigure {
    std::int64_t s, slots;
    double rho;
    std::vector<std::int64_t> generations;  // one ncs curve per r
};

int run_figures(const std::vector<std::string>& args) {
    CLI::App app{"Reproduce the published parameter sweeps", "sancap figures"};
    std::string fig, config, out_dir = "figures_out";
    std::uint64_t seed = 1;
    std::int64_t events = 100000, reps = 20;
    app.add_option("--fig", fig, "one of 4a, 4b, 5, 8, 9")->required();
    app.add_option("--out-dir", out_dir)->capture_default_str();
    app.add_option("--seed", seed, "master seed for simulation figures")->capture_default_str();
    app.add_option("--events", events)->capture_default_str();
    app.add_option("--reps", reps)->capture_default_str();
    app.add_option("--config", config, "key = value parameter file");
    parse_command_line(app, args, {});

    const std::filesystem::path dir(out_dir);
    std::vector<std::string> outputs;
    json params{{"fig", fig}, {"out-dir", out_dir}};

    const std::map<std::string, SrFigure> sr_figures{
        {"4a", {2, 2, 0.2, {2}}},
        {"4b", {4, 2, 0.9, {2, 4}}},
        {"5", {8, 1, 0.9, {8}}},
    };

    json derived;
    if (auto it = sr_figures.find(fig); it != sr_figures.end()) {
        const SrFigure& f = it->second;
        const std::int64_t chunks = 150, w_min = 1, w_max = 30;
        // One shared T so every curve in the figure is comparable: rounded up
        // to a multiple of s whenever any ncs curve needs it.
        std::int64_t t_eff = chunks;
        for (std::int64_t r : f.generations)
            t_eff = std::max(t_eff, rounded_chunks(SrConfig{chunks, f.s, 1, f.slots, f.rho, r}));
        const auto emit = [&](const std::string& name, const std::string& scheme,
                              std::int64_t r) {
            const std::filesystem::path path = dir / name;
            write_file(path, sr_sweep_csv(scheme, f.s, t_eff, f.slots, f.rho, r, w_min, w_max));
            outputs.push_back(path.string());
        };
        emit("ucs.csv", "ucs", 1);
        for (std::int64_t r : f.generations) emit("ncs_r" + format_int(r) + ".csv", "ncs", r);
        derived["s"] = f.s;
        derived["T"] = chunks;
        derived["T_effective"] = t_eff;
        derived["slots"] = f.slots;
        derived["rho"] = f.rho;
        derived["w-min"] = w_min;
        derived["w-max"] = w_max;
    } else if (fig == "8") {
        const std::int64_t m1 = 8, m2 = 4, slots = 2;
        const std::int64_t warmup = events / 10;
        const std::vector<double> grid{1, 2, 3, 4, 5, 6, 7, 8};
        for (MrScheme scheme : {MrScheme::urs, MrScheme::crs}) {
            CsvBuilder csv(
                "scheme,m1,m2,slots,lambda1,lambda2,mu,P_s_mean,std_err,reps,events,seed");
            SimPlan base{MrConfig{m1, m2, slots, 1.0, 1.0, 1.0, scheme}, warmup, events, reps,
                         seed};
            const std::vector<SimEstimate> estimates = sweep_load(base, grid);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double lam = grid[k] / 2.0;
                csv.row({to_string(scheme), format_int(m1), format_int(m2), format_int(slots),
                         format_double(lam), format_double(lam), format_double(1.0),
                         format_double(estimates[k].p_s_mean),
                         format_double(estimates[k].std_error), format_int(reps),
                         format_int(events), std::to_string(seed)});
            }
            const std::filesystem::path path = dir / (std::string(to_string(scheme)) + ".csv");
            write_file(path, csv.text());
            outputs.push_back(path.string());
        }
        derived["m1"] = m1;
        derived["m2"] = m2;
        derived["slots"] = slots;
        derived["load-grid"] = grid;
        derived["warmup"] = warmup;
    } else if (fig == "9") {
        const std::int64_t m = 12, slots = 2;
        const double load = 6.0, c = 1.0;
        const std::vector<double> ratios{1, 2, 3, 4, 5};
        const std::string header = "lambda_ratio,scheme,m,m2_opt,cost,P_b1,P_b2,P_s";
        const auto emit_curve = [&](const std::string& name, MrScheme scheme, bool fixed_split) {
            CsvBuilder csv(header);
            for (double ratio : ratios) {
                AllocationProblem problem{m, c, ratio, load, slots, scheme, false};
                CandidateEval eval;
                if (fixed_split) {
                    eval = evaluate_allocation(problem, m / 3);  // m1 = 2 m2 convention
                } else {
                    const AllocationResult r = optimize(problem);
                    eval = {r.best_m2, r.cost, r.blocking, r.saturation_at_optimum};
                }
                csv.row({format_double(ratio), to_string(scheme), format_int(m),
                         format_int(eval.m2), format_double(eval.cost),
                         format_double(eval.blocking.type1), format_double(eval.blocking.type2),
                         format_double(eval.saturation)});
            }
            const std::filesystem::path path = dir / name;
            write_file(path, csv.text());
            outputs.push_back(path.string());
        };
        emit_curve("classical.csv", MrScheme::classical, false);
        emit_curve("urs.csv", MrScheme::urs, false);
        emit_curve("crs.csv", MrScheme::crs, false);
        // classical at the fixed m1 = 2*m2 split, recorded alongside the
        // optimized curve
        emit_curve("classical_fixed.csv", MrScheme::classical, true);
        derived["m"] = m;
        derived["slots"] = slots;
        derived["load"] = load;
        derived["c"] = c;
        derived["lambda-ratio-grid"] = ratios;
    } else {
        throw CLI::ValidationError("--fig", "unknown figure id '" + fig + "'");
    }

    params["seed"] = seed;
    params["events"] = events;
    params["reps"] = reps;
    write_manifest(dir / "manifest.json", "figures", params, outputs, derived);
    return exit_ok;
}

// --- rlnc-demo ----------------------------------------------------------

int run_rlnc_demo(const std::vector<std::string>& args) {
    CLI::App app{"Coded vs. replicated two-segment layout demo", "sancap rlnc-demo"};
    std::string config, out;
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "also write the demo output to this file");
    parse_command_line(app, args, {});

    const std::vector<std::uint8_t> x1{'s', 'e', 'g', 'm', 'e', 'n', 't', '1'};
    const std::vector<std::uint8_t> x2{'s', 'e', 'g', 'm', 'e', 'n', 't', '2'};
    Generation gen(0, {x1, x2});

    // System (1): plain replication X1, X1, X2, X2.  A reader needing both
    // segments must reach one of the top two drives AND one of the bottom two.
    // System (2): coded drives; over GF(256) the pair (1,2) plays the role of
    // X1 - X2, keeping every pair of rows invertible.
    const std::vector<std::vector<std::uint8_t>> rows{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    std::vector<CodedChunk> drives;
    for (const auto& row : rows) drives.push_back(encode(gen, row));

    std::string text;
    text += "System (1), replication: drives store X1, X1, X2, X2\n";
    text += "  both segments readable only via {drive 1 or 2} AND {drive 3 or 4}\n";
    text += "System (2), coded storage over GF(256):\n";
    for (std::size_t k = 0; k < drives.size(); ++k)
        text += "  drive " + std::to_string(k + 1) + " stores " +
                std::to_string(int(rows[k][0])) + "*X1 + " + std::to_string(int(rows[k][1])) +
                "*X2\n";
    text += "  decoding from every pair of drives:\n";
    for (std::size_t a = 0; a < drives.size(); ++a) {
        for (std::size_t b = a + 1; b < drives.size(); ++b) {
            const std::vector<CodedChunk> pair{drives[a], drives[b]};
            const DecodeResult decoded = decode(pair);
            const bool ok = decoded && decoded.payloads[0] == x1 && decoded.payloads[1] == x2;
            text += "    drives {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                    "} -> " + (ok ? "recovered X1, X2" : "FAILED") + "\n";
        }
    }
    const std::vector<CodedChunk> dup{drives[2], drives[2]};
    const DecodeResult bad = decode(dup);
    text += "  duplicate coded drive pair -> rank " + std::to_string(bad.rank) +
            " (rank-deficient, cannot decode)\n";

    std::cout << text;
    if (!out.empty()) write_file(out, text);
    return exit_ok;
}

void print_usage(std::ostream& os) {
    os << "sancap " << sancap::version
       << " - storage-area-network capacity planning toolkit\n"
          "\n"
          "usage: sancap <command> [flags]\n"
          "\n"
          "commands:\n"
          "  erlang     Erlang-B blocking probability for K servers at load rho\n"
          "  sr-sweep   UCS/NCS file blocking vs. copy count W (CSV)\n"
          "  mr-exact   exact urs/crs chain solve or classical closed form (CSV)\n"
          "  mr-sim     Monte-Carlo urs/crs saturation estimate (CSV)\n"
          "  optimize   best m2 split minimizing P_b1 + c*P_b2 (CSV)\n"
          "  figures    preconfigured sweeps: 4a, 4b, 5, 8, 9 (CSV set + manifest)\n"
          "  rlnc-demo  decode-from-any-two-drives coding demonstration\n"
          "\n"
          "run `sancap <command> --help` for the command's flags; every command\n"
          "also accepts --config <file> with `key = value` lines (flags win).\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        print_usage(std::cout);
        return args.empty() ? exit_usage : exit_ok;
    }
    if (args[0] == "--version") {
        std::cout << sancap::version << "\n";
        return exit_ok;
    }
    const std::string command = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (command == "erlang") return run_erlang(rest);
        if (command == "sr-sweep") return run_sr_sweep(rest);
        if (command == "mr-exact") return run_mr_exact(rest);
        if (command == "mr-sim") return run_mr_sim(rest);
        if (command == "optimize") return run_optimize(rest);
        if (command == "figures") return run_figures(rest);
        if (command == "rlnc-demo") return run_rlnc_demo(rest);
        std::cerr << "sancap: unknown command '" << command << "'\n\n";
        print_usage(std::cerr);
        return exit_usage;
    } catch (const HelpShown&) {
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::cerr << "sancap " << command << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const WriteError& e) {
        std::cerr << "sancap " << command << ": " << e.what() << "\n";
        return exit_output;
    } catch (const std::exception& e) {
        std::cerr << "sancap " << command << ": " << e.what() << "\n";
        return exit_usage;
    }
}
