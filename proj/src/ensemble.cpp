#include "ensemble.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "postprocess.hpp"

namespace rearr {

TrialTrace run_trial_traced(const TrialParams& params, uint64_t seed) {
    TrialTrace trace;
    trace.initial = load_stochastic(params.spec, seed);

    const auto t0 = std::chrono::steady_clock::now();
    MoveLog log;
    Occupancy compressed = run_compression(trace.initial, params.spec, params.protocol, log);
    PostprocessResult post = run_postprocess(compressed, params.spec, log);
    Metrics metrics = tally(log, params.continuous_release);
    const auto t1 = std::chrono::steady_clock::now();

    TrialResult& r = trace.result;
    r.seed = seed;
    r.metrics = metrics;
    r.realized_r = realized_ratio(trace.initial, params.spec);
    r.unfilled = static_cast<int>(post.unfilled.size());
    r.success = post.unfilled.empty();
    r.plan_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.total_us = time_of(metrics, params.time_model);
    r.initial_vacancies = target_vacancies(trace.initial, params.spec);

    trace.final = std::move(post.board);
    trace.log = std::move(log);
    return trace;
}

TrialResult run_trial(const TrialParams& params, uint64_t seed) {
    return run_trial_traced(params, seed).result;
}

namespace {

// Quantities aggregated per ensemble, in a fixed order shared with the
// reducer below.
constexpr int kQuantities = 16;

void quantities_of(const TrialResult& t, double out[kQuantities]) {
    const Metrics& m = t.metrics;
    const bool cont = m.continuous_release;
    out[0] = t.realized_r;
    out[1] = static_cast<double>(m.C_para());
    out[2] = static_cast<double>(m.R_para());
    out[3] = static_cast<double>(m.D_para());
    out[4] = static_cast<double>(m.C_post());
    out[5] = static_cast<double>(m.R_post());
    out[6] = static_cast<double>(m.D_post());
    out[7] = static_cast<double>(m.C());
    out[8] = static_cast<double>(m.R());
    out[9] = static_cast<double>(m.D());
    out[10] = m.M();
    out[11] = m.M_post();
    out[12] = t.total_us;
    out[13] = t.plan_ms;
    out[14] = static_cast<double>(m.para.release_merged);
    // M under merged-release accounting of the same log.
    out[15] = cont ? m.M()
                   : 0.5 * static_cast<double>(m.C() + m.para.release_merged + m.post.release_merged);
}

Stat& stat_slot(EnsembleStats& s, int i) {
    Stat* slots[kQuantities] = {&s.r,      &s.C_para, &s.R_para, &s.D_para,
                                &s.C_post, &s.R_post, &s.D_post, &s.C,
                                &s.R,      &s.D,      &s.M,      &s.M_post,
                                &s.T_us,   &s.plan_ms, &s.R_para_merged, &s.M_merged};
    return *slots[i];
}

} // namespace

std::vector<TrialResult> run_trials(const TrialParams& params, long n_trials, uint64_t base_seed,
                                    int threads) {
    if (n_trials < 1)
        throw std::invalid_argument("run_trials: need at least one trial");

    std::vector<TrialResult> results(static_cast<std::size_t>(n_trials));
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > n_trials) workers = static_cast<int>(n_trials);

    auto work = [&](int tid) {
        for (long i = tid; i < n_trials; i += workers)
            results[static_cast<std::size_t>(i)] =
                run_trial(params, base_seed + static_cast<uint64_t>(i));
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return results;
}

EnsembleStats aggregate(const TrialParams& params, const std::vector<TrialResult>& results) {
    if (results.empty())
        throw std::invalid_argument("aggregate: no trials");
    const long n_trials = static_cast<long>(results.size());
    EnsembleStats stats;
    stats.target_sites = params.spec.target_sites();
    stats.array_len = params.spec.array_len;
    stats.fill = params.spec.fill;
    stats.protocol = params.protocol;
    stats.continuous_release = params.continuous_release;
    stats.trials = n_trials;

    // Two-pass moments in seed order.
    double sums[kQuantities] = {};
    double buf[kQuantities];
    for (const TrialResult& t : results) {
        stats.successes += t.success;
        quantities_of(t, buf);
        for (int q = 0; q < kQuantities; ++q) sums[q] += buf[q];
    }
    stats.failure_rate =
        static_cast<double>(n_trials - stats.successes) / static_cast<double>(n_trials);

    const double n = static_cast<double>(n_trials);
    double means[kQuantities];
    for (int q = 0; q < kQuantities; ++q) means[q] = sums[q] / n;

    double ss[kQuantities] = {};
    for (const TrialResult& t : results) {
        quantities_of(t, buf);
        for (int q = 0; q < kQuantities; ++q) {
            const double d = buf[q] - means[q];
            ss[q] += d * d;
        }
    }
    for (int q = 0; q < kQuantities; ++q) {
        Stat& s = stat_slot(stats, q);
        s.mean = means[q];
        s.stddev = n_trials > 1 ? std::sqrt(ss[q] / (n - 1.0)) : 0.0;
        s.sem = s.stddev / std::sqrt(n);
    }
    return stats;
}

EnsembleStats run_ensemble(const TrialParams& params, long n_trials, uint64_t base_seed,
                           int threads) {
    return aggregate(params, run_trials(params, n_trials, base_seed, threads));
}

namespace {

// Least squares on y ~ a*f(x) + b*g(x) via the 2x2 normal equations.
struct Basis2Fit {
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;
};

template <typename F, typename G>
Basis2Fit solve_basis2(const FitPoints& pts, F&& f, G&& g) {
    double sff = 0, sfg = 0, sgg = 0, sfy = 0, sgy = 0;
    for (const auto& [x, y] : pts) {
        const double fx = f(x), gx = g(x);
        sff += fx * fx;
        sfg += fx * gx;
        sgg += gx * gx;
        sfy += fx * y;
        sgy += gx * y;
    }
    const double det = sff * sgg - sfg * sfg;
    if (!(std::fabs(det) > 1e-12 * std::max(1.0, sff * sgg)))
        throw std::invalid_argument("fit: degenerate design (need two distinct abscissae)");
    Basis2Fit out;
    out.a = (sgg * sfy - sfg * sgy) / det;
    out.b = (sff * sgy - sfg * sfy) / det;
    double rss = 0;
    for (const auto& [x, y] : pts) {
        const double e = y - out.a * f(x) - out.b * g(x);
        rss += e * e;
    }
    out.residual = std::sqrt(rss);
    return out;
}

void require_points(const FitPoints& pts, std::size_t min_count) {
    if (pts.size() < min_count)
        throw std::invalid_argument("fit: not enough points");
}

} // namespace

FitResult fit_linear_sqrt(const FitPoints& points) {
    require_points(points, 2);
    auto fit = solve_basis2(points, [](double x) { return x; },
                            [](double x) { return std::sqrt(x); });
    return {FitModel::LinearSqrt, fit.a, fit.b, fit.residual};
}

FitResult fit_power(const FitPoints& points) {
    require_points(points, 2);
    FitPoints logged;
    logged.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("fit_power: requires positive coordinates");
        logged.emplace_back(std::log(x), std::log(y));
    }
    auto fit = solve_basis2(logged, [](double) { return 1.0; }, [](double lx) { return lx; });
    return {FitModel::PowerLaw, std::exp(fit.a), fit.b, fit.residual};
}

FitResult fit_exp_decay(const FitPoints& points) {
    require_points(points, 2);
    FitPoints logged;
    logged.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(y > 0.0))
            throw std::invalid_argument("fit_exp_decay: requires positive ordinates");
        logged.emplace_back(x, std::log(y));
    }
    auto fit = solve_basis2(logged, [](double) { return 1.0; }, [](double x) { return x; });
    return {FitModel::ExpDecay, std::exp(fit.a), -fit.b, fit.residual};
}

std::vector<EnsembleStats> sweep_target(const std::vector<int>& target_lens, double fill,
                                        ReservoirMode mode, Protocol protocol,
                                        bool continuous_release, const TimeModel& tm,
                                        long n_trials, uint64_t base_seed, int threads) {
    std::vector<EnsembleStats> rows;
    rows.reserve(target_lens.size());
    for (int len : target_lens) {
        TrialParams params{make_spec(len, fill, mode), protocol, continuous_release, tm};
        rows.push_back(run_ensemble(params, n_trials, base_seed, threads));
    }
    return rows;
}

std::vector<EnsembleStats> sweep_reservoir(int target_len, double fill,
                                           const std::vector<int>& array_lens, Protocol protocol,
                                           bool continuous_release, const TimeModel& tm,
                                           long n_trials, uint64_t base_seed, int threads) {
    std::vector<EnsembleStats> rows;
    rows.reserve(array_lens.size());
    for (int alen : array_lens) {
        TrialParams params{make_spec(target_len, fill, ReservoirMode::Explicit, alen), protocol,
                           continuous_release, tm};
        rows.push_back(run_ensemble(params, n_trials, base_seed, threads));
    }
    return rows;
}

} // namespace rearr
