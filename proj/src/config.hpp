#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ensemble.hpp"
#include "lattice.hpp"
#include "movelog.hpp"

namespace rearr {

// Flat run configuration. Every field maps to one key of the line-oriented
// key=value config format and to one CLI flag; file values are applied first
// and flags override.
struct RunConfig {
    int target_len = 14;                                // L
    double fill = 0.5;                                  // p
    ReservoirMode reservoir = ReservoirMode::Default;
    int array_len = 0;                                  // L', explicit mode only
    Protocol protocol = Protocol::FullParallel;
    bool continuous_release = false;
    long trials = 10000;
    uint64_t base_seed = 1;
    int threads = 0;      // 0 = hardware concurrency
    bool timings = false; // emit measured plan_ms into CSVs (non-reproducible)
    TimeModel time_model;

    enum class SweepAxis { TargetSites, ArrayLen };
    SweepAxis sweep_axis = SweepAxis::TargetSites;
    std::vector<long> sweep_values;

    // Output paths, resolved against out_dir by the caller; empty = skip.
    std::string out_dir;
    std::string trials_csv = "trials.csv";
    std::string stats_csv = "stats.csv";
    std::string schedule_json;
    std::string save_board;
};

// Applies one key=value pair; throws std::invalid_argument for unknown keys
// or unparseable values.
void apply_kv(RunConfig& cfg, const std::string& key, const std::string& value);

// Parses a config file body: one key=value per line, '#' starts a comment,
// blank lines ignored. Later lines override earlier ones.
RunConfig parse_config(const std::string& text);

// Same line format applied on top of an existing configuration; `base` is
// untouched when the text is malformed.
RunConfig merge_config(const RunConfig& base, const std::string& text);

// Serializes every key in fixed order; parse(dump(c)) is equivalent to c.
std::string dump_config(const RunConfig& cfg);

// Validated GridSpec for this configuration.
GridSpec spec_of(const RunConfig& cfg);

TrialParams trial_params_of(const RunConfig& cfg);

const char* protocol_name(Protocol p);
const char* reservoir_name(ReservoirMode m);

} // namespace rearr
