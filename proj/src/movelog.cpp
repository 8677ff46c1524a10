#include "movelog.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rearr {

void MoveLog::append(const MoveLog& other) {
    for (LogEvent e : other.events_) {
        e.op_id += next_op_id_;
        events_.push_back(std::move(e));
    }
    next_op_id_ += other.next_op_id_;
}

Metrics tally(const MoveLog& log, bool continuous_release) {
    Metrics m;
    m.continuous_release = continuous_release;
    std::unordered_set<long> releasing_ops[2];
    for (const LogEvent& e : log.events()) {
        StageTally& t = (e.stage == Stage::Compression) ? m.para : m.post;
        switch (e.kind) {
            case LogEvent::Kind::Capture:
                ++t.captures;
                break;
            case LogEvent::Kind::Sweep:
                t.distance += e.steps;
                t.atom_distance += static_cast<long>(e.steps) * static_cast<long>(e.sites.size());
                break;
            case LogEvent::Kind::Release:
                ++t.release_stops;
                releasing_ops[static_cast<int>(e.stage)].insert(e.op_id);
                break;
        }
    }
    m.para.release_merged = static_cast<long>(releasing_ops[0].size());
    m.post.release_merged = static_cast<long>(releasing_ops[1].size());
    return m;
}

double time_of(const Metrics& m, const TimeModel& tm) {
    return static_cast<double>(m.C() + m.R()) * tm.t1_us +
           static_cast<double>(m.D()) * tm.t2_us();
}

namespace {

[[noreturn]] void replay_fault(const char* what, Site s) {
    throw std::logic_error(std::string("move log replay: ") + what + " at (" +
                           std::to_string(s.row) + "," + std::to_string(s.col) + ")");
}

} // namespace

Occupancy replay(const Occupancy& initial, const MoveLog& log) {
    Occupancy occ = initial;
    for (const LogEvent& e : log.events()) {
        switch (e.kind) {
            case LogEvent::Kind::Capture:
                for (Site s : e.sites) {
                    if (!occ.in_bounds(s) || !occ.filled(s)) replay_fault("capture from empty trap", s);
                    occ.remove(s);
                }
                break;
            case LogEvent::Kind::Sweep:
                for (Site s : e.sites) {
                    Site cur = s;
                    for (int step = 0; step < e.steps; ++step) {
                        cur.row += e.drow;
                        cur.col += e.dcol;
                        if (!occ.in_bounds(cur)) replay_fault("sweep off the grid", cur);
                        if (occ.filled(cur)) replay_fault("sweep across filled trap", cur);
                    }
                }
                break;
            case LogEvent::Kind::Release:
                for (Site s : e.sites) {
                    if (!occ.in_bounds(s) || occ.filled(s)) replay_fault("release onto filled trap", s);
                    occ.add(s);
                }
                break;
        }
    }
    return occ;
}

} // namespace rearr
