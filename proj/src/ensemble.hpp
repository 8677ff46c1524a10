#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "compression.hpp"
#include "lattice.hpp"
#include "movelog.hpp"

namespace rearr {

struct TrialParams {
    GridSpec spec;
    Protocol protocol = Protocol::FullParallel;
    bool continuous_release = false;
    TimeModel time_model;
};

struct TrialResult {
    uint64_t seed = 0;
    Metrics metrics;
    double realized_r = 0.0;  // atoms loaded / target sites
    int unfilled = 0;
    bool success = false;
    double plan_ms = 0.0;   // wall-clock planning time, both stages
    double total_us = 0.0;  // time_of under the trial's time model
    int initial_vacancies = 0;
};

// One full trial: stochastic load, compression, postprocess, tally.
// Deterministic in (params, seed) except for plan_ms.
TrialResult run_trial(const TrialParams& params, uint64_t seed);

// As run_trial but also hands back the board history and log, for schedule
// export and replay checks.
struct TrialTrace {
    TrialResult result;
    Occupancy initial;
    Occupancy final;
    MoveLog log;
};
TrialTrace run_trial_traced(const TrialParams& params, uint64_t seed);

struct Stat {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    double sem = 0.0;
};

// Per-point Monte Carlo aggregates over every trial. Trials that end with
// unreachable vacancies still contribute their tallies; how often that
// happens is surfaced as the failure rate rather than folded into the means.
struct EnsembleStats {
    int target_sites = 0;  // N
    int array_len = 0;     // L'
    double fill = 0.0;
    Protocol protocol = Protocol::FullParallel;
    bool continuous_release = false;
    long trials = 0;
    long successes = 0;
    double failure_rate = 0.0;

    Stat r, C_para, R_para, D_para, C_post, R_post, D_post, C, R, D, M, M_post, T_us, plan_ms;
    // Same logs under the merged-release accounting, for side-by-side study.
    Stat R_para_merged, M_merged;
};

// Runs seeds base_seed .. base_seed+n_trials-1, spread over `threads` workers
// (0 = hardware concurrency); results come back in seed order regardless of
// scheduling.
std::vector<TrialResult> run_trials(const TrialParams& params, long n_trials, uint64_t base_seed,
                                    int threads = 0);

// Seed-order reduction of per-trial results into ensemble statistics.
EnsembleStats aggregate(const TrialParams& params, const std::vector<TrialResult>& results);

EnsembleStats run_ensemble(const TrialParams& params, long n_trials, uint64_t base_seed,
                           int threads = 0);

enum class FitModel { LinearSqrt, PowerLaw, ExpDecay };

// Fitted coefficients: LinearSqrt y = a*x + b*sqrt(x); PowerLaw y = a*x^b;
// ExpDecay y = a*exp(-b*x). residual_norm is the L2 misfit in the space the
// fit was solved in (linear for LinearSqrt, log for the other two).
struct FitResult {
    FitModel model = FitModel::LinearSqrt;
    double a = 0.0;
    double b = 0.0;
    double residual_norm = 0.0;
};

using FitPoints = std::vector<std::pair<double, double>>;

FitResult fit_linear_sqrt(const FitPoints& points);
FitResult fit_power(const FitPoints& points);
FitResult fit_exp_decay(const FitPoints& points);

// One ensemble per target side in `target_lens`, reservoir sized per `mode`.
std::vector<EnsembleStats> sweep_target(const std::vector<int>& target_lens, double fill,
                                        ReservoirMode mode, Protocol protocol,
                                        bool continuous_release, const TimeModel& tm,
                                        long n_trials, uint64_t base_seed, int threads = 0);

// One ensemble per initial-array side in `array_lens`, at fixed target side.
std::vector<EnsembleStats> sweep_reservoir(int target_len, double fill,
                                           const std::vector<int>& array_lens, Protocol protocol,
                                           bool continuous_release, const TimeModel& tm,
                                           long n_trials, uint64_t base_seed, int threads = 0);

} // namespace rearr
