#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "ensemble.hpp"
#include "loading.hpp"

namespace rearr {

// Fixed CSV schemas. Trial rows:
//   seed,N,Lprime,r,protocol,C_para,R_para,D_para,C_post,R_post,D_post,
//   C,R,D,M,T_us,unfilled,plan_ms
// Stats rows repeat the keys and append _mean/_std/_sem per quantity.
// plan_ms columns are written as 0 unless timings are enabled, so repeated
// runs emit byte-identical files.
std::string trial_csv_header();
std::string trial_csv_row(const TrialResult& t, const GridSpec& spec, Protocol protocol,
                          bool continuous_release, bool timings);

std::string stats_csv_header();
std::string stats_csv_row(const EnsembleStats& s, bool timings);

// '# fit ...' footer lines appended to sweep stats CSVs.
std::string fit_footer_target(const std::vector<EnsembleStats>& rows);
std::string fit_footer_reservoir(const std::vector<EnsembleStats>& rows);
std::string fit_line(const std::string& label, const FitResult& fit);

// One-line run digest: N, r, trials, failure rate, M and D with spread, T.
std::string summary_line(const EnsembleStats& s, const GridSpec& spec);

// Text picture of a board: '●' filled, '○' empty; when the target block is a
// strict subgrid its rows are bracketed at the block's column bounds.
std::string render_board(const Occupancy& occ, const GridSpec& spec);

// Locale-independent float formatting used by every emitter.
std::string format_fixed(double v, int precision);
std::string format_shortest(double v);

} // namespace rearr
