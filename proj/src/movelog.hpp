#pragma once

#include <cstdint>
#include <vector>

#include "lattice.hpp"
#include "loading.hpp"

namespace rearr {

enum class Stage { Compression = 0, Postprocess = 1 };

// One tweezer event. Capture lifts atoms out of the listed traps, Sweep moves
// every held atom `steps` sites along (drow, dcol), Release drops atoms into
// the listed traps. Sweep lists the held atoms' positions at sweep start so a
// log replays without any planner state.
struct LogEvent {
    enum class Kind { Capture = 0, Sweep = 1, Release = 2 };

    Stage stage = Stage::Compression;
    int op_id = 0;
    Kind kind = Kind::Capture;
    std::vector<Site> sites;
    int drow = 0;  // Sweep only
    int dcol = 0;
    int steps = 0;
};

// Ordered event stream of a full run; every metric derives from it.
class MoveLog {
public:
    int begin_op(Stage stage) {
        current_stage_ = stage;
        return next_op_id_++;
    }

    void capture(int op_id, std::vector<Site> sites) {
        events_.push_back({current_stage_, op_id, LogEvent::Kind::Capture, std::move(sites), 0, 0, 0});
    }
    void sweep(int op_id, std::vector<Site> held, int drow, int dcol, int steps) {
        events_.push_back({current_stage_, op_id, LogEvent::Kind::Sweep, std::move(held), drow, dcol, steps});
    }
    void release(int op_id, std::vector<Site> sites) {
        events_.push_back({current_stage_, op_id, LogEvent::Kind::Release, std::move(sites), 0, 0, 0});
    }

    const std::vector<LogEvent>& events() const { return events_; }
    bool empty() const { return events_.empty(); }

    // Appends another log, renumbering its op ids so they stay unique.
    void append(const MoveLog& other);

private:
    std::vector<LogEvent> events_;
    int next_op_id_ = 0;
    Stage current_stage_ = Stage::Compression;
};

// Event counts per stage plus the derived comparison quantities. Capture and
// release tallies count events, not atoms; D sums sweep steps (bus travel).
// release_stops vs release_merged carry both accounting conventions: one
// release per stop of the tweezer row, or one per transfer when the row can
// drop atoms without stopping.
struct StageTally {
    long captures = 0;
    long release_stops = 0;
    long release_merged = 0;  // one release event per op
    long distance = 0;
    long atom_distance = 0;  // diagnostic: summed per-atom travel
};

struct Metrics {
    StageTally para;  // compression stage
    StageTally post;  // postprocess stage
    bool continuous_release = false;

    long C_para() const { return para.captures; }
    long R_para() const { return continuous_release ? para.release_merged : para.release_stops; }
    long D_para() const { return para.distance; }
    long C_post() const { return post.captures; }
    long R_post() const { return continuous_release ? post.release_merged : post.release_stops; }
    long D_post() const { return post.distance; }

    long C() const { return C_para() + C_post(); }
    long R() const { return R_para() + R_post(); }
    long D() const { return D_para() + D_post(); }
    long atom_distance() const { return para.atom_distance + post.atom_distance; }

    double M() const { return 0.5 * static_cast<double>(C() + R()); }
    double M_post() const { return 0.5 * static_cast<double>(C_post() + R_post()); }
};

// Counts events into per-stage tallies. `continuous_release` selects which
// release convention the derived R/M report; both are tallied regardless.
Metrics tally(const MoveLog& log, bool continuous_release = false);

// Durations of the two primitive costs: t1 for a trap-depth ramp (capture or
// release), t2 = l/v for moving one trap spacing.
struct TimeModel {
    double t1_us = 30.0;
    double trap_um = 2.0;            // l
    double speed_um_per_ms = 100.0;  // v

    double t2_us() const { return trap_um / speed_um_per_ms * 1000.0; }

    // Keeps t2 = l/v by adjusting the speed.
    void set_t2_us(double t2) { speed_um_per_ms = trap_um / t2 * 1000.0; }
};

// Total rearrangement time (C + R) t1 + D t2, in microseconds.
double time_of(const Metrics& m, const TimeModel& tm);

// Re-executes the log against an initial board, enforcing that captures lift
// existing atoms, sweeps cross only empty traps, and releases land on empty
// traps. Throws std::logic_error on any violation. Returns the final board.
Occupancy replay(const Occupancy& initial, const MoveLog& log);

} // namespace rearr
