#include "emit.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace rearr {

std::string format_fixed(double v, int precision) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    return std::string(buf, p);
}

std::string format_shortest(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

namespace {

const char* kQuantityNames[] = {"r",      "C_para", "R_para", "D_para", "C_post",
                                "R_post", "D_post", "C",      "R",      "D",
                                "M",      "M_post", "T_us",   "plan_ms"};

std::string protocol_label(Protocol p, bool continuous_release) {
    std::string label = protocol_name(p);
    if (continuous_release) label += "+cr";
    return label;
}

} // namespace

std::string trial_csv_header() {
    return "seed,N,Lprime,r,protocol,C_para,R_para,D_para,C_post,R_post,D_post,"
           "C,R,D,M,T_us,unfilled,plan_ms\n";
}

std::string trial_csv_row(const TrialResult& t, const GridSpec& spec, Protocol protocol,
                          bool continuous_release, bool timings) {
    const Metrics& m = t.metrics;
    std::string row;
    row += std::to_string(t.seed);
    row += ',' + std::to_string(spec.target_sites());
    row += ',' + std::to_string(spec.array_len);
    row += ',' + format_fixed(t.realized_r, 6);
    row += ',';
    row += protocol_label(protocol, continuous_release);
    row += ',' + std::to_string(m.C_para());
    row += ',' + std::to_string(m.R_para());
    row += ',' + std::to_string(m.D_para());
    row += ',' + std::to_string(m.C_post());
    row += ',' + std::to_string(m.R_post());
    row += ',' + std::to_string(m.D_post());
    row += ',' + std::to_string(m.C());
    row += ',' + std::to_string(m.R());
    row += ',' + std::to_string(m.D());
    row += ',' + format_fixed(m.M(), 1);
    row += ',' + format_fixed(t.total_us, 3);
    row += ',' + std::to_string(t.unfilled);
    row += ',' + format_fixed(timings ? t.plan_ms : 0.0, 6);
    row += '\n';
    return row;
}

std::string stats_csv_header() {
    std::string h = "N,Lprime,p,protocol,trials,successes,failure_rate";
    for (const char* name : kQuantityNames) {
        h += ',';
        h += name;
        h += "_mean,";
        h += name;
        h += "_std,";
        h += name;
        h += "_sem";
    }
    h += '\n';
    return h;
}

std::string stats_csv_row(const EnsembleStats& s, bool timings) {
    const Stat zero{};
    const Stat* stats[] = {&s.r, &s.C_para, &s.R_para, &s.D_para, &s.C_post,
                           &s.R_post, &s.D_post, &s.C, &s.R, &s.D,
                           &s.M, &s.M_post, &s.T_us, timings ? &s.plan_ms : &zero};
    std::string row;
    row += std::to_string(s.target_sites);
    row += ',' + std::to_string(s.array_len);
    row += ',' + format_shortest(s.fill);
    row += ',';
    row += protocol_label(s.protocol, s.continuous_release);
    row += ',' + std::to_string(s.trials);
    row += ',' + std::to_string(s.successes);
    row += ',' + format_fixed(s.failure_rate, 6);
    for (const Stat* st : stats) {
        row += ',' + format_fixed(st->mean, 6);
        row += ',' + format_fixed(st->stddev, 6);
        row += ',' + format_fixed(st->sem, 6);
    }
    row += '\n';
    return row;
}

std::string fit_line(const std::string& label, const FitResult& fit) {
    std::string form;
    switch (fit.model) {
        case FitModel::LinearSqrt: form = "a*x + b*sqrt(x)"; break;
        case FitModel::PowerLaw: form = "a*x^b"; break;
        case FitModel::ExpDecay: form = "a*exp(-b*x)"; break;
    }
    return "# fit " + label + " = " + form + ": a=" + format_fixed(fit.a, 6) +
           " b=" + format_fixed(fit.b, 6) + " resid=" + format_fixed(fit.residual_norm, 6) + "\n";
}

namespace {

FitPoints collect(const std::vector<EnsembleStats>& rows, double (*x)(const EnsembleStats&),
                  const Stat EnsembleStats::*y) {
    FitPoints pts;
    for (const EnsembleStats& s : rows) {
        const double yv = (s.*y).mean;
        if (!std::isnan(yv)) pts.emplace_back(x(s), yv);
    }
    return pts;
}

double n_of(const EnsembleStats& s) { return static_cast<double>(s.target_sites); }
double r_of(const EnsembleStats& s) {
    return s.fill * static_cast<double>(s.array_len) * s.array_len / s.target_sites;
}

} // namespace

std::string fit_footer_target(const std::vector<EnsembleStats>& rows) {
    std::string out;
    try {
        out += fit_line("M(N)", fit_linear_sqrt(collect(rows, n_of, &EnsembleStats::M)));
        out += fit_line("R_para(N)", fit_power(collect(rows, n_of, &EnsembleStats::R_para)));
        out += fit_line("D_post(N)", fit_power(collect(rows, n_of, &EnsembleStats::D_post)));
    } catch (const std::invalid_argument& e) {
        out += std::string("# fit unavailable: ") + e.what() + "\n";
    }
    return out;
}

std::string fit_footer_reservoir(const std::vector<EnsembleStats>& rows) {
    std::string out;
    try {
        out += fit_line("M_post(r)", fit_exp_decay(collect(rows, r_of, &EnsembleStats::M_post)));
        out += fit_line("D_post(r)", fit_exp_decay(collect(rows, r_of, &EnsembleStats::D_post)));
    } catch (const std::invalid_argument& e) {
        out += std::string("# fit unavailable: ") + e.what() + "\n";
    }
    return out;
}

std::string summary_line(const EnsembleStats& s, const GridSpec& spec) {
    std::string out = "N=" + std::to_string(s.target_sites);
    out += " Lprime=" + std::to_string(s.array_len);
    out += " r=" + format_fixed(spec.reservoir_ratio(), 3);
    out += " trials=" + std::to_string(s.trials);
    out += " fail_rate=" + format_fixed(s.failure_rate, 4);
    out += " M=" + format_fixed(s.M.mean, 2) + "+-" + format_fixed(s.M.stddev, 2);
    out += " D=" + format_fixed(s.D.mean, 2) + "+-" + format_fixed(s.D.stddev, 2);
    out += " T_us=" + format_fixed(s.T_us.mean, 1);
    out += "\n";
    return out;
}

std::string render_board(const Occupancy& occ, const GridSpec& spec) {
    const bool bracket = spec.array_len > spec.target_len;
    std::string out;
    for (int r = 0; r < occ.height(); ++r) {
        const bool target_row = r >= spec.offset && r < spec.offset + spec.target_len;
        for (int c = 0; c < occ.width(); ++c) {
            if (bracket && c == spec.offset) out += target_row ? "[" : " ";
            out += occ.filled(r, c) ? "●" : "○";
            if (bracket && c == spec.offset + spec.target_len - 1) out += target_row ? "]" : " ";
        }
        out += '\n';
    }
    return out;
}

} // namespace rearr
