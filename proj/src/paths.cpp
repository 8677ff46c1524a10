#include "paths.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace rearr {

std::vector<PathSegment> Path::segments() const {
    std::vector<PathSegment> runs;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        const int dr = waypoints[i].row - waypoints[i - 1].row;
        const int dc = waypoints[i].col - waypoints[i - 1].col;
        if (!runs.empty() && runs.back().drow == dr && runs.back().dcol == dc)
            ++runs.back().steps;
        else
            runs.push_back({dr, dc, 1});
    }
    return runs;
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

// Appends the straight walk from `from` (exclusive) to `to` (inclusive).
void append_straight(std::vector<Site>& out, Site from, Site to) {
    const int dr = sign(to.row - from.row);
    const int dc = sign(to.col - from.col);
    Site cur = from;
    while (!(cur == to)) {
        cur.row += dr;
        cur.col += dc;
        out.push_back(cur);
    }
}

// All sites of the straight walk after `from` up to and including `to` empty?
bool walk_clear(const Occupancy& occ, Site from, Site to) {
    const int dr = sign(to.row - from.row);
    const int dc = sign(to.col - from.col);
    Site cur = from;
    while (!(cur == to)) {
        cur.row += dr;
        cur.col += dc;
        if (occ.filled(cur)) return false;
    }
    return true;
}

} // namespace

bool straight_clear(const Occupancy& occ, Site from, Site to) {
    if (from == to)
        throw std::invalid_argument("straight_clear: endpoints must differ");
    if (from.row != to.row && from.col != to.col)
        throw std::invalid_argument("straight_clear: endpoints must share a row or column");
    return walk_clear(occ, from, to);
}

std::optional<Path> one_turn_path(const Occupancy& occ, Site from, Site to) {
    if (from.row == to.row || from.col == to.col) {
        if (!walk_clear(occ, from, to)) return std::nullopt;
        Path p;
        p.waypoints.push_back(from);
        append_straight(p.waypoints, from, to);
        return p;
    }
    // Row-first leg ends at the corner in the destination's row.
    for (Site corner : {Site{to.row, from.col}, Site{from.row, to.col}}) {
        if (occ.filled(corner)) continue;
        if (!walk_clear(occ, from, corner) || !walk_clear(occ, corner, to)) continue;
        Path p;
        p.waypoints.push_back(from);
        append_straight(p.waypoints, from, corner);
        append_straight(p.waypoints, corner, to);
        return p;
    }
    return std::nullopt;
}

std::optional<Path> shortest_clear_path(const Occupancy& occ, Site from, Site to) {
    const int h = occ.height();
    const int w = occ.width();
    auto idx = [w](Site s) { return static_cast<std::size_t>(s.row) * w + s.col; };

    std::vector<int32_t> parent(static_cast<std::size_t>(h) * w, -1);
    std::queue<Site> frontier;
    parent[idx(from)] = static_cast<int32_t>(idx(from));
    frontier.push(from);

    static constexpr Site kNeighborOrder[4] = {{-1, 0}, {0, -1}, {1, 0}, {0, 1}};

    bool reached = false;
    while (!frontier.empty() && !reached) {
        const Site cur = frontier.front();
        frontier.pop();
        for (const Site d : kNeighborOrder) {
            const Site nxt{cur.row + d.row, cur.col + d.col};
            if (!occ.in_bounds(nxt) || parent[idx(nxt)] >= 0 || occ.filled(nxt)) continue;
            parent[idx(nxt)] = static_cast<int32_t>(idx(cur));
            if (nxt == to) {
                reached = true;
                break;
            }
            frontier.push(nxt);
        }
    }
    if (!reached) return std::nullopt;

    Path p;
    Site cur = to;
    while (!(cur == from)) {
        p.waypoints.push_back(cur);
        const auto pi = parent[idx(cur)];
        cur = {static_cast<int>(pi) / w, static_cast<int>(pi) % w};
    }
    p.waypoints.push_back(from);
    std::reverse(p.waypoints.begin(), p.waypoints.end());
    return p;
}

} // namespace rearr
