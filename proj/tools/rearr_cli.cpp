// rearr command line: drives the shared planning library through its C API.
//
// Subcommands:
//   run       Monte Carlo trials at one configuration; writes trial/stats CSVs
//   sweep     grid of configurations; stats CSV rows plus fit footers
//   fit       refit columns of a stored stats CSV
//   schedule  plan a fixed board snapshot into a move schedule (JSON)
//   render    draw a board snapshot as text
//
// REARR_OUT_DIR sets the default output directory.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "rearr/rearr.h"

namespace {

namespace fs = std::filesystem;

struct ConfigDeleter {
    void operator()(rearr_config* c) const { rearr_config_free(c); }
};
struct ReportDeleter {
    void operator()(rearr_report* r) const { rearr_report_free(r); }
};
using ConfigPtr = std::unique_ptr<rearr_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<rearr_report, ReportDeleter>;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "rearr: " << message << "\n";
    std::exit(1);
}

void check(int status) {
    if (status != REARR_OK) die(rearr_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write '" + path.string() + "'");
    out << text;
    if (!out) die("write failed for '" + path.string() + "'");
}

std::string default_out_dir() {
    const char* env = std::getenv("REARR_OUT_DIR");
    return env && *env ? env : ".";
}

// Flag values collected by CLI11 and replayed onto the config so that flags
// win over the config file.
struct PendingFlags {
    std::vector<std::pair<std::string, std::string>> kv;
    std::string config_file;

    void apply(rearr_config* cfg) const {
        if (!config_file.empty()) check(rearr_config_parse(cfg, read_file(config_file).c_str()));
        for (const auto& [key, value] : kv) check(rearr_config_set(cfg, key.c_str(), value.c_str()));
    }
};

void add_common_options(CLI::App* cmd, PendingFlags& flags) {
    cmd->add_option("--config", flags.config_file, "config file (key=value lines)");
    auto opt = [cmd, &flags](const std::string& flag, const std::string& key,
                             const std::string& help) {
        cmd->add_option_function<std::string>(
               flag, [&flags, key](const std::string& v) { flags.kv.emplace_back(key, v); }, help)
            ->type_name("TEXT");
    };
    opt("--L", "L", "target block side length");
    opt("--p", "p", "filling fraction");
    opt("--reservoir", "reservoir", "default|saturated|explicit");
    opt("--lprime", "lprime", "initial array side (explicit reservoir)");
    opt("--protocol", "protocol", "full|partial|single");
    opt("--continuous-release", "continuous_release", "merged-release accounting (true|false)");
    opt("--trials", "trials", "number of trials");
    opt("--seed", "seed", "base seed");
    opt("--threads", "threads", "worker threads (0 = hardware)");
    opt("--timings", "timings", "emit measured plan_ms into CSVs (true|false)");
    opt("--t1-us", "t1_us", "capture/release ramp time [us]");
    opt("--t2-us", "t2_us", "per-site sweep time [us]");
    opt("--trap-um", "trap_um", "trap spacing [um]");
    opt("--speed", "speed_um_per_ms", "tweezer speed [um/ms]");
    opt("--out-dir", "out_dir", "output directory");
    opt("--trials-csv", "trials_csv", "trial CSV filename");
    opt("--stats-csv", "stats_csv", "stats CSV filename");
}

fs::path resolve(const std::string& out_dir, const std::string& name) {
    const fs::path p(name);
    return p.is_absolute() ? p : fs::path(out_dir) / p;
}

std::string section_or_die(const rearr_report* rep, const char* name) {
    const char* text = rearr_report_get(rep, name);
    if (!text) die(std::string("missing report section '") + name + "'");
    return text;
}

std::string config_value(const rearr_config* cfg, const std::string& key) {
    // The dump is line-oriented key=value; fish the key out.
    char* text = nullptr;
    check(rearr_config_dump(cfg, &text));
    std::string dump(text);
    rearr_string_free(text);
    std::istringstream in(dump);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
    return "";
}

int cmd_run(const PendingFlags& flags, const std::string& schedule_out,
            const std::string& board_out) {
    ConfigPtr cfg(rearr_config_new());
    check(rearr_config_set(cfg.get(), "out_dir", default_out_dir().c_str()));
    flags.apply(cfg.get());
    if (!schedule_out.empty()) check(rearr_config_set(cfg.get(), "schedule_json", schedule_out.c_str()));
    if (!board_out.empty()) check(rearr_config_set(cfg.get(), "save_board", board_out.c_str()));

    rearr_report* raw = nullptr;
    check(rearr_run(cfg.get(), &raw));
    ReportPtr rep(raw);

    const std::string out_dir = config_value(cfg.get(), "out_dir");
    write_file(resolve(out_dir, config_value(cfg.get(), "trials_csv")),
               section_or_die(rep.get(), "trials_csv"));
    write_file(resolve(out_dir, config_value(cfg.get(), "stats_csv")),
               section_or_die(rep.get(), "stats_csv"));
    if (!schedule_out.empty())
        write_file(resolve(out_dir, schedule_out), section_or_die(rep.get(), "schedule_json"));
    if (!board_out.empty())
        write_file(resolve(out_dir, board_out), section_or_die(rep.get(), "board"));
    std::cout << section_or_die(rep.get(), "summary");
    return 0;
}

int cmd_sweep(const PendingFlags& flags, const std::string& axis, const std::string& values) {
    ConfigPtr cfg(rearr_config_new());
    check(rearr_config_set(cfg.get(), "out_dir", default_out_dir().c_str()));
    flags.apply(cfg.get());
    if (!axis.empty()) check(rearr_config_set(cfg.get(), "sweep_axis", axis.c_str()));
    if (!values.empty()) check(rearr_config_set(cfg.get(), "sweep_values", values.c_str()));

    rearr_report* raw = nullptr;
    check(rearr_sweep(cfg.get(), &raw));
    ReportPtr rep(raw);

    write_file(resolve(config_value(cfg.get(), "out_dir"), config_value(cfg.get(), "stats_csv")),
               section_or_die(rep.get(), "stats_csv"));
    std::cout << section_or_die(rep.get(), "summary");
    return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& model, const std::string& x,
            const std::string& y) {
    const std::string csv = read_file(csv_path);
    char* text = nullptr;
    check(rearr_fit_csv(csv.c_str(), model.c_str(), x.c_str(), y.c_str(), &text));
    std::cout << text;
    rearr_string_free(text);
    return 0;
}

int cmd_schedule(const PendingFlags& flags, const std::string& board_path,
                 const std::string& out_name, bool verify) {
    ConfigPtr cfg(rearr_config_new());
    check(rearr_config_set(cfg.get(), "out_dir", default_out_dir().c_str()));
    flags.apply(cfg.get());

    const std::string board = read_file(board_path);
    rearr_report* raw = nullptr;
    check(rearr_plan_board(cfg.get(), board.c_str(), &raw));
    ReportPtr rep(raw);

    const std::string schedule = section_or_die(rep.get(), "schedule_json");
    if (verify) {
        char* replayed = nullptr;
        check(rearr_replay_schedule(schedule.c_str(), board.c_str(), &replayed));
        const bool ok = section_or_die(rep.get(), "final_board") == replayed;
        rearr_string_free(replayed);
        if (!ok) die("schedule replay does not reproduce the planned board");
    }
    write_file(resolve(config_value(cfg.get(), "out_dir"), out_name), schedule);
    std::cout << section_or_die(rep.get(), "summary");
    return 0;
}

int cmd_render(const std::string& board_path, int target_len, const std::string& out_name) {
    const std::string board = read_file(board_path);
    char* text = nullptr;
    check(rearr_render_board(board.c_str(), target_len, &text));
    if (out_name.empty())
        std::cout << text;
    else
        write_file(resolve(default_out_dir(), out_name), text);
    rearr_string_free(text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"defect-free atom-array rearrangement planner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rearr_version()));

    PendingFlags run_flags;
    std::string run_schedule, run_board;
    auto* run = app.add_subcommand("run", "Monte Carlo trials at one configuration");
    add_common_options(run, run_flags);
    run->add_option("--schedule", run_schedule, "also export the base seed's move schedule");
    run->add_option("--save-board", run_board, "also save the base seed's initial board");

    PendingFlags sweep_flags;
    std::string sweep_axis, sweep_values;
    auto* sweep = app.add_subcommand("sweep", "grid of configurations with fit footers");
    add_common_options(sweep, sweep_flags);
    sweep->add_option("--axis", sweep_axis, "N (target sites) or lprime");
    sweep->add_option("--values", sweep_values, "comma-separated grid values");

    std::string fit_csv, fit_model = "linsqrt", fit_x = "N", fit_y = "M_mean";
    auto* fit = app.add_subcommand("fit", "refit columns of a stored stats CSV");
    fit->add_option("--csv", fit_csv, "stats CSV path")->required();
    fit->add_option("--model", fit_model, "linsqrt|power|expdecay");
    fit->add_option("--x", fit_x, "abscissa column");
    fit->add_option("--y", fit_y, "ordinate column");

    PendingFlags sched_flags;
    std::string sched_board, sched_out = "schedule.json";
    bool sched_verify = false;
    auto* schedule = app.add_subcommand("schedule", "plan a board snapshot into a move schedule");
    add_common_options(schedule, sched_flags);
    schedule->add_option("--board", sched_board, "board snapshot path")->required();
    schedule->add_option("--out", sched_out, "schedule output filename");
    schedule->add_flag("--verify", sched_verify, "replay the schedule before writing it");

    std::string render_board_path, render_out;
    int render_L = 0;
    auto* render = app.add_subcommand("render", "draw a board snapshot as text");
    render->add_option("--board", render_board_path, "board snapshot path")->required();
    render->add_option("--L", render_L, "target block side length")->required();
    render->add_option("--out", render_out, "output filename (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(run_flags, run_schedule, run_board);
    if (sweep->parsed()) return cmd_sweep(sweep_flags, sweep_axis, sweep_values);
    if (fit->parsed()) return cmd_fit(fit_csv, fit_model, fit_x, fit_y);
    if (schedule->parsed()) return cmd_schedule(sched_flags, sched_board, sched_out, sched_verify);
    if (render->parsed()) return cmd_render(render_board_path, render_L, render_out);
    return 1;
}
