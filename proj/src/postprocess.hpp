#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "loading.hpp"
#include "movelog.hpp"
#include "paths.hpp"

namespace rearr {

// One single-tweezer fill: a reservoir atom carried to a target vacancy.
struct FillMove {
    Site source;
    Site dest;
    Path path;
};

struct PostprocessResult {
    Occupancy board;
    std::vector<Site> unfilled;  // vacancies no reservoir atom could reach
};

// Empty target traps of a post-compression board, innermost layer first,
// then by row and column.
std::vector<Site> remaining_vacancies(const Occupancy& occ, const GridSpec& spec);

// Picks the reservoir atom (filled trap outside the target block) that fills
// `vacancy` over the shortest clear path: candidates are tried in ascending
// Manhattan distance (ties: smaller row, then column) for a one-turn path;
// only if none admits one does a breadth-first fallback look for the
// shortest multi-turn route.
std::optional<FillMove> select_source(const Occupancy& occ, const GridSpec& spec, Site vacancy);

// Stage 2: fills the remaining vacancies one atom at a time, innermost
// first, logging each capture/sweep/release and updating the board between
// moves. Unreachable vacancies are reported, never retried.
PostprocessResult run_postprocess(const Occupancy& initial, const GridSpec& spec, MoveLog& log);

} // namespace rearr
