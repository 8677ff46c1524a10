#pragma once

#include <optional>
#include <vector>

#include "lattice.hpp"
#include "loading.hpp"

namespace rearr {

// A straight run of unit steps along one axis.
struct PathSegment {
    int drow = 0;
    int dcol = 0;
    int steps = 0;
};

// Lattice path of adjacent-trap steps. Waypoints include both endpoints;
// consecutive waypoints differ by one step along exactly one axis.
struct Path {
    std::vector<Site> waypoints;

    int length() const { return static_cast<int>(waypoints.size()) - 1; }
    Site from() const { return waypoints.front(); }
    Site to() const { return waypoints.back(); }

    // Run-length encoding into straight runs; a one-turn path has exactly two.
    std::vector<PathSegment> segments() const;
};

// True iff the straight run from `from` (exclusive) to `to` (inclusive) meets
// no filled trap; the moving atom's own source never blocks. Sites must share
// a row or a column.
bool straight_clear(const Occupancy& occ, Site from, Site to);

// L-shaped route: tries the row-first ordering then the column-first one,
// requiring corner, intermediates, and destination empty; collinear pairs
// degenerate to a single segment. Empty result when both orderings are
// blocked.
std::optional<Path> one_turn_path(const Occupancy& occ, Site from, Site to);

// Breadth-first search over 4-neighbor moves through non-filled traps
// (neighbor order up, left, down, right, giving a deterministic shortest
// path). Empty result when no route exists.
std::optional<Path> shortest_clear_path(const Occupancy& occ, Site from, Site to);

} // namespace rearr
