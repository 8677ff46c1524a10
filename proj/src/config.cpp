#include "config.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw std::invalid_argument("config: bad value '" + value + "' for key '" + key + "'");
}

long parse_long(const std::string& key, const std::string& value) {
    long out = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size()) bad_value(key, value);
    return out;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
    uint64_t out = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size()) bad_value(key, value);
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || p != value.data() + value.size()) bad_value(key, value);
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    bad_value(key, value);
}

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

} // namespace

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::FullParallel: return "full";
        case Protocol::PartialParallel: return "partial";
        case Protocol::SingleTweezer: return "single";
    }
    return "full";
}

const char* reservoir_name(ReservoirMode m) {
    switch (m) {
        case ReservoirMode::Default: return "default";
        case ReservoirMode::Saturated: return "saturated";
        case ReservoirMode::Explicit: return "explicit";
    }
    return "default";
}

void apply_kv(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "L") {
        cfg.target_len = static_cast<int>(parse_long(key, value));
    } else if (key == "p") {
        cfg.fill = parse_double(key, value);
    } else if (key == "reservoir") {
        if (value == "default") cfg.reservoir = ReservoirMode::Default;
        else if (value == "saturated") cfg.reservoir = ReservoirMode::Saturated;
        else if (value == "explicit") cfg.reservoir = ReservoirMode::Explicit;
        else bad_value(key, value);
    } else if (key == "lprime") {
        cfg.array_len = static_cast<int>(parse_long(key, value));
    } else if (key == "protocol") {
        if (value == "full") cfg.protocol = Protocol::FullParallel;
        else if (value == "partial") cfg.protocol = Protocol::PartialParallel;
        else if (value == "single") cfg.protocol = Protocol::SingleTweezer;
        else bad_value(key, value);
    } else if (key == "continuous_release") {
        cfg.continuous_release = parse_bool(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_long(key, value);
    } else if (key == "seed") {
        cfg.base_seed = parse_u64(key, value);
    } else if (key == "threads") {
        cfg.threads = static_cast<int>(parse_long(key, value));
    } else if (key == "timings") {
        cfg.timings = parse_bool(key, value);
    } else if (key == "t1_us") {
        cfg.time_model.t1_us = parse_double(key, value);
    } else if (key == "t2_us") {
        cfg.time_model.set_t2_us(parse_double(key, value));
    } else if (key == "trap_um") {
        cfg.time_model.trap_um = parse_double(key, value);
    } else if (key == "speed_um_per_ms") {
        cfg.time_model.speed_um_per_ms = parse_double(key, value);
    } else if (key == "sweep_axis") {
        if (value == "N") cfg.sweep_axis = RunConfig::SweepAxis::TargetSites;
        else if (value == "lprime") cfg.sweep_axis = RunConfig::SweepAxis::ArrayLen;
        else bad_value(key, value);
    } else if (key == "sweep_values") {
        cfg.sweep_values.clear();
        std::string item;
        std::istringstream in(value);
        while (std::getline(in, item, ','))
            if (!item.empty()) cfg.sweep_values.push_back(parse_long(key, item));
    } else if (key == "out_dir") {
        cfg.out_dir = value;
    } else if (key == "trials_csv") {
        cfg.trials_csv = value;
    } else if (key == "stats_csv") {
        cfg.stats_csv = value;
    } else if (key == "schedule_json") {
        cfg.schedule_json = value;
    } else if (key == "save_board") {
        cfg.save_board = value;
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

RunConfig parse_config(const std::string& text) {
    return merge_config(RunConfig{}, text);
}

RunConfig merge_config(const RunConfig& base, const std::string& text) {
    RunConfig cfg = base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        while (!value.empty() && (value.front() == ' ' || value.front() == '\t'))
            value.erase(value.begin());
        apply_kv(cfg, key, value);
    }
    return cfg;
}

std::string dump_config(const RunConfig& cfg) {
    std::string out;
    auto kv = [&out](const std::string& k, const std::string& v) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    };
    kv("L", std::to_string(cfg.target_len));
    kv("p", format_double(cfg.fill));
    kv("reservoir", reservoir_name(cfg.reservoir));
    kv("lprime", std::to_string(cfg.array_len));
    kv("protocol", protocol_name(cfg.protocol));
    kv("continuous_release", cfg.continuous_release ? "true" : "false");
    kv("trials", std::to_string(cfg.trials));
    kv("seed", std::to_string(cfg.base_seed));
    kv("threads", std::to_string(cfg.threads));
    kv("timings", cfg.timings ? "true" : "false");
    kv("t1_us", format_double(cfg.time_model.t1_us));
    kv("trap_um", format_double(cfg.time_model.trap_um));
    kv("speed_um_per_ms", format_double(cfg.time_model.speed_um_per_ms));
    kv("sweep_axis", cfg.sweep_axis == RunConfig::SweepAxis::TargetSites ? "N" : "lprime");
    std::string values;
    for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
        if (i) values += ',';
        values += std::to_string(cfg.sweep_values[i]);
    }
    kv("sweep_values", values);
    kv("out_dir", cfg.out_dir);
    kv("trials_csv", cfg.trials_csv);
    kv("stats_csv", cfg.stats_csv);
    kv("schedule_json", cfg.schedule_json);
    kv("save_board", cfg.save_board);
    return out;
}

GridSpec spec_of(const RunConfig& cfg) {
    return make_spec(cfg.target_len, cfg.fill, cfg.reservoir, cfg.array_len);
}

TrialParams trial_params_of(const RunConfig& cfg) {
    return {spec_of(cfg), cfg.protocol, cfg.continuous_release, cfg.time_model};
}

} // namespace rearr
