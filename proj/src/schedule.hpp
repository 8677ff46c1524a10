#pragma once

#include <string>

#include "lattice.hpp"
#include "loading.hpp"
#include "movelog.hpp"

namespace rearr {

// Serializes a move log as a JSON schedule: a header (grid dims, target
// rect, time model, tallied counts) plus one record per tweezer event with
// the sites involved, the tone count (atoms held), and its duration —
// t1 for capture/release ramps, steps*t2 for sweeps. Under the merged-release
// convention each transfer keeps a single release record. total_us equals
// time_of(tally(log)) for the same convention.
std::string export_schedule(const MoveLog& log, const GridSpec& spec, const TimeModel& tm,
                            bool continuous_release = false);

// Re-executes an exported schedule against an initial board and returns the
// final board. Throws std::invalid_argument on malformed schedules or a
// board/grid mismatch, std::logic_error when the schedule collides.
Occupancy replay_schedule(const std::string& schedule_json, const Occupancy& initial);

// Total duration stated by a schedule, microseconds.
double schedule_total_us(const std::string& schedule_json);

} // namespace rearr
