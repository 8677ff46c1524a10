#include "rearr/rearr.h"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "compression.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "ensemble.hpp"
#include "loading.hpp"
#include "movelog.hpp"
#include "postprocess.hpp"
#include "schedule.hpp"

struct rearr_config {
    rearr::RunConfig cfg;
};

struct rearr_report {
    std::map<std::string, std::string> sections;
};

namespace {

thread_local std::string g_last_error = "no error";

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn() translating exceptions into status codes; `parse_errors` selects
// the code used for std::invalid_argument (text inputs vs bad arguments).
template <typename Fn>
int guarded(bool parse_errors, Fn&& fn) {
    try {
        fn();
        return REARR_OK;
    } catch (const std::invalid_argument& e) {
        return fail(parse_errors ? REARR_ERR_PARSE : REARR_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(REARR_ERR_RUNTIME, e.what());
    }
}

using namespace rearr;

// Per-trial rows, aggregate row, summary, and the optional extras.
void build_run_report(const RunConfig& cfg, rearr_report& rep) {
    const TrialParams params = trial_params_of(cfg);
    const auto results = run_trials(params, cfg.trials, cfg.base_seed, cfg.threads);
    const EnsembleStats stats = aggregate(params, results);

    std::string trials_text = trial_csv_header();
    for (const TrialResult& t : results)
        trials_text += trial_csv_row(t, params.spec, cfg.protocol, cfg.continuous_release,
                                     cfg.timings);
    rep.sections["trials_csv"] = std::move(trials_text);
    rep.sections["stats_csv"] = stats_csv_header() + stats_csv_row(stats, cfg.timings);
    rep.sections["summary"] = summary_line(stats, params.spec);

    if (!cfg.schedule_json.empty() || !cfg.save_board.empty()) {
        const TrialTrace trace = run_trial_traced(params, cfg.base_seed);
        if (!cfg.schedule_json.empty())
            rep.sections["schedule_json"] =
                export_schedule(trace.log, params.spec, cfg.time_model, cfg.continuous_release);
        if (!cfg.save_board.empty()) rep.sections["board"] = trace.initial.to_text();
    }
}

void build_sweep_report(const RunConfig& cfg, rearr_report& rep) {
    if (cfg.sweep_values.empty())
        throw std::invalid_argument("sweep: no grid values configured");

    std::vector<EnsembleStats> rows;
    std::string summary;
    if (cfg.sweep_axis == RunConfig::SweepAxis::TargetSites) {
        std::vector<int> lens;
        for (long n : cfg.sweep_values) {
            const int len = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
            if (static_cast<long>(len) * len != n)
                throw std::invalid_argument("sweep: N=" + std::to_string(n) +
                                            " is not a square target size");
            lens.push_back(len);
        }
        rows = sweep_target(lens, cfg.fill, cfg.reservoir, cfg.protocol, cfg.continuous_release,
                            cfg.time_model, cfg.trials, cfg.base_seed, cfg.threads);
        for (std::size_t i = 0; i < rows.size(); ++i)
            summary += summary_line(rows[i], make_spec(lens[i], cfg.fill, cfg.reservoir,
                                                       cfg.array_len));
    } else {
        std::vector<int> alens;
        for (long v : cfg.sweep_values) alens.push_back(static_cast<int>(v));
        rows = sweep_reservoir(cfg.target_len, cfg.fill, alens, cfg.protocol,
                               cfg.continuous_release, cfg.time_model, cfg.trials, cfg.base_seed,
                               cfg.threads);
        for (std::size_t i = 0; i < rows.size(); ++i)
            summary += summary_line(rows[i], make_spec(cfg.target_len, cfg.fill,
                                                       ReservoirMode::Explicit, alens[i]));
    }

    std::string stats_text = stats_csv_header();
    for (const EnsembleStats& s : rows) stats_text += stats_csv_row(s, cfg.timings);
    stats_text += cfg.sweep_axis == RunConfig::SweepAxis::TargetSites
                      ? fit_footer_target(rows)
                      : fit_footer_reservoir(rows);
    rep.sections["stats_csv"] = std::move(stats_text);
    rep.sections["summary"] = std::move(summary);
}

void build_board_report(const RunConfig& cfg, const std::string& board_text, rearr_report& rep) {
    const Occupancy initial = Occupancy::from_text(board_text);
    if (initial.height() != initial.width())
        throw std::invalid_argument("board snapshot must be square");
    const GridSpec spec =
        make_spec(cfg.target_len, cfg.fill, ReservoirMode::Explicit, initial.height());

    MoveLog log;
    Occupancy compressed = run_compression(initial, spec, cfg.protocol, log);
    PostprocessResult post = run_postprocess(compressed, spec, log);
    const Metrics m = tally(log, cfg.continuous_release);

    TrialResult t;
    t.seed = 0;
    t.metrics = m;
    t.realized_r = realized_ratio(initial, spec);
    t.unfilled = static_cast<int>(post.unfilled.size());
    t.success = post.unfilled.empty();
    t.total_us = time_of(m, cfg.time_model);
    t.initial_vacancies = target_vacancies(initial, spec);

    rep.sections["schedule_json"] =
        export_schedule(log, spec, cfg.time_model, cfg.continuous_release);
    rep.sections["final_board"] = post.board.to_text();
    rep.sections["trials_csv"] =
        trial_csv_header() +
        trial_csv_row(t, spec, cfg.protocol, cfg.continuous_release, cfg.timings);
    rep.sections["summary"] =
        "N=" + std::to_string(spec.target_sites()) + " Lprime=" + std::to_string(spec.array_len) +
        " M=" + format_fixed(m.M(), 1) + " D=" + std::to_string(m.D()) +
        " T_us=" + format_fixed(t.total_us, 3) + " unfilled=" + std::to_string(t.unfilled) + "\n";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

std::string fit_from_csv(const std::string& csv_text, const std::string& model,
                         const std::string& x_column, const std::string& y_column) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("fit: empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    long xi = -1, yi = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == x_column) xi = static_cast<long>(i);
        if (header[i] == y_column) yi = static_cast<long>(i);
    }
    if (xi < 0 || yi < 0)
        throw std::invalid_argument("fit: column not found in CSV header");

    FitPoints pts;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto cells = split_csv_line(line);
        if (static_cast<long>(cells.size()) <= std::max(xi, yi))
            throw std::invalid_argument("fit: short CSV row");
        pts.emplace_back(std::stod(cells[static_cast<std::size_t>(xi)]),
                         std::stod(cells[static_cast<std::size_t>(yi)]));
    }

    FitResult fit;
    if (model == "linsqrt") fit = fit_linear_sqrt(pts);
    else if (model == "power") fit = fit_power(pts);
    else if (model == "expdecay") fit = fit_exp_decay(pts);
    else throw std::invalid_argument("fit: unknown model '" + model + "'");
    return fit_line(y_column + "(" + x_column + ")", fit);
}

} // namespace

extern "C" {

const char* rearr_last_error(void) { return g_last_error.c_str(); }

const char* rearr_version(void) { return "0.1.0"; }

void rearr_string_free(char* s) { delete[] s; }

rearr_config* rearr_config_new(void) { return new rearr_config{}; }

void rearr_config_free(rearr_config* cfg) { delete cfg; }

int rearr_config_set(rearr_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(REARR_ERR_NULL, "null argument");
    return guarded(false, [&] { apply_kv(cfg->cfg, key, value); });
}

int rearr_config_parse(rearr_config* cfg, const char* text) {
    if (!cfg || !text) return fail(REARR_ERR_NULL, "null argument");
    return guarded(true, [&] { cfg->cfg = merge_config(cfg->cfg, text); });
}

int rearr_config_dump(const rearr_config* cfg, char** out_text) {
    if (!cfg || !out_text) return fail(REARR_ERR_NULL, "null argument");
    return guarded(false, [&] { *out_text = copy_string(dump_config(cfg->cfg)); });
}

void rearr_report_free(rearr_report* rep) { delete rep; }

const char* rearr_report_get(const rearr_report* rep, const char* section) {
    if (!rep || !section) return nullptr;
    const auto it = rep->sections.find(section);
    return it == rep->sections.end() ? nullptr : it->second.c_str();
}

int rearr_run(const rearr_config* cfg, rearr_report** out_report) {
    if (!cfg || !out_report) return fail(REARR_ERR_NULL, "null argument");
    return guarded(false, [&] {
        auto rep = std::make_unique<rearr_report>();
        build_run_report(cfg->cfg, *rep);
        *out_report = rep.release();
    });
}

int rearr_sweep(const rearr_config* cfg, rearr_report** out_report) {
    if (!cfg || !out_report) return fail(REARR_ERR_NULL, "null argument");
    return guarded(false, [&] {
        auto rep = std::make_unique<rearr_report>();
        build_sweep_report(cfg->cfg, *rep);
        *out_report = rep.release();
    });
}

int rearr_plan_board(const rearr_config* cfg, const char* board_text,
                     rearr_report** out_report) {
    if (!cfg || !board_text || !out_report) return fail(REARR_ERR_NULL, "null argument");
    return guarded(true, [&] {
        auto rep = std::make_unique<rearr_report>();
        build_board_report(cfg->cfg, board_text, *rep);
        *out_report = rep.release();
    });
}

int rearr_make_board(const rearr_config* cfg, uint64_t seed, char** out_board_text) {
    if (!cfg || !out_board_text) return fail(REARR_ERR_NULL, "null argument");
    return guarded(false, [&] {
        *out_board_text = copy_string(load_stochastic(spec_of(cfg->cfg), seed).to_text());
    });
}

int rearr_render_board(const char* board_text, int target_len, char** out_text) {
    if (!board_text || !out_text) return fail(REARR_ERR_NULL, "null argument");
    return guarded(true, [&] {
        const Occupancy occ = Occupancy::from_text(board_text);
        if (occ.height() != occ.width())
            throw std::invalid_argument("board snapshot must be square");
        const GridSpec spec = make_spec(target_len, 1.0, ReservoirMode::Explicit, occ.height());
        *out_text = copy_string(render_board(occ, spec));
    });
}

int rearr_replay_schedule(const char* schedule_json, const char* board_text,
                          char** out_final_board_text) {
    if (!schedule_json || !board_text || !out_final_board_text)
        return fail(REARR_ERR_NULL, "null argument");
    return guarded(true, [&] {
        const Occupancy initial = Occupancy::from_text(board_text);
        *out_final_board_text = copy_string(replay_schedule(schedule_json, initial).to_text());
    });
}

int rearr_fit_csv(const char* csv_text, const char* model, const char* x_column,
                  const char* y_column, char** out_fit_text) {
    if (!csv_text || !model || !x_column || !y_column || !out_fit_text)
        return fail(REARR_ERR_NULL, "null argument");
    return guarded(true, [&] {
        *out_fit_text = copy_string(fit_from_csv(csv_text, model, x_column, y_column));
    });
}

} // extern "C"
