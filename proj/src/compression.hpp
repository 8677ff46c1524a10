#pragma once

#include <vector>

#include "lattice.hpp"
#include "loading.hpp"
#include "movelog.hpp"

namespace rearr {

// How movable atoms of one side are batched onto mobile tweezers.
// FullParallel rides every movable atom of the side on one tweezer row;
// PartialParallel groups atoms whose paths share a length; SingleTweezer
// moves them one at a time.
enum class Protocol { FullParallel = 0, PartialParallel = 1, SingleTweezer = 2 };

// One planned straight inward move: source on the current ring, destination
// the deepest clear empty target trap on the same line.
struct Assignment {
    Site source;
    Site dest;
    int length = 0;  // path steps, units of the trap spacing
};

// One simultaneous transfer of a tweezer row: all assignments share the
// inward direction and lie on distinct parallel lines. Costs one capture,
// one release per distinct path length (the row stops once per length), and
// bus travel equal to the longest path.
struct TransferOp {
    int layer = 0;
    SideId side = SideId::Top;
    std::vector<Assignment> assignments;  // ordered by position along the side
    std::vector<int> distinct_lengths;    // sorted ascending

    int bus_distance() const { return distinct_lengths.empty() ? 0 : distinct_lengths.back(); }
    int captures() const { return 1; }
    int releases(bool continuous_release) const {
        return continuous_release ? 1 : static_cast<int>(distinct_lengths.size());
    }
};

// Movable atoms of one side of ring k: each filled side trap is scanned
// straight inward (toward the target center) across the inner region of
// layers < k; it is movable iff the clear prefix before the first filled trap
// holds at least one empty target trap, and it is sent to the deepest one.
// Atoms already on target traps are candidates too.
std::vector<Assignment> find_movable(const Occupancy& occ, const GridSpec& spec, int layer,
                                     SideId side);

// Batches one side's assignments into transfer ops per the protocol.
std::vector<TransferOp> plan_side(const std::vector<Assignment>& assignments, Protocol protocol,
                                  int layer, SideId side);

// Moves every assignment of the op: sources emptied, destinations filled.
// Throws std::logic_error if any straight path is not clear, which would be
// an internal planning bug since planning and application are adjacent.
void apply_transfer(Occupancy& occ, const TransferOp& op);

// Stage 1: sweeps rings 1..max_layer inside out, sides in counterclockwise
// order, re-reading the board between sides. Appends every transfer to `log`
// and returns the compressed board.
Occupancy run_compression(const Occupancy& initial, const GridSpec& spec, Protocol protocol,
                          MoveLog& log);

} // namespace rearr
