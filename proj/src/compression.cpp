#include "compression.hpp"

#include <algorithm>
#include <stdexcept>

namespace rearr {

std::vector<Assignment> find_movable(const Occupancy& occ, const GridSpec& spec, int layer,
                                     SideId side) {
    if (layer < 1)
        throw std::invalid_argument("find_movable: source layers start at 1");

    const LayerRing ring = ring_sides(layer, spec);
    const Site step = inward_step(side);

    std::vector<Assignment> out;
    for (Site src : ring.side(side)) {
        if (!occ.filled(src)) continue;
        Site cur = src;
        Site deepest;
        bool reachable = false;
        while (true) {
            cur.row += step.row;
            cur.col += step.col;
            if (!spec.in_grid(cur)) break;
            if (layer_of(cur, spec) >= layer) break;  // left the inner region
            if (occ.filled(cur)) break;               // clear prefix ends
            if (spec.in_target(cur)) {
                deepest = cur;
                reachable = true;
            }
        }
        if (reachable) out.push_back({src, deepest, manhattan(src, deepest)});
    }
    return out;
}

namespace {

std::vector<int> sorted_distinct_lengths(const std::vector<Assignment>& assignments) {
    std::vector<int> lengths;
    lengths.reserve(assignments.size());
    for (const Assignment& a : assignments) lengths.push_back(a.length);
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    return lengths;
}

} // namespace

std::vector<TransferOp> plan_side(const std::vector<Assignment>& assignments, Protocol protocol,
                                  int layer, SideId side) {
    std::vector<TransferOp> ops;
    if (assignments.empty()) return ops;

    switch (protocol) {
        case Protocol::FullParallel: {
            TransferOp op{layer, side, assignments, sorted_distinct_lengths(assignments)};
            ops.push_back(std::move(op));
            break;
        }
        case Protocol::PartialParallel: {
            // One op per distinct length, ascending; members keep side order.
            for (int len : sorted_distinct_lengths(assignments)) {
                TransferOp op{layer, side, {}, {len}};
                for (const Assignment& a : assignments)
                    if (a.length == len) op.assignments.push_back(a);
                ops.push_back(std::move(op));
            }
            break;
        }
        case Protocol::SingleTweezer: {
            for (const Assignment& a : assignments)
                ops.push_back({layer, side, {a}, {a.length}});
            break;
        }
    }
    return ops;
}

void apply_transfer(Occupancy& occ, const TransferOp& op) {
    for (const Assignment& a : op.assignments) {
        if (!occ.filled(a.source))
            throw std::logic_error("apply_transfer: source trap is empty");
        Site cur = a.source;
        const int dr = (a.dest.row > a.source.row) - (a.dest.row < a.source.row);
        const int dc = (a.dest.col > a.source.col) - (a.dest.col < a.source.col);
        while (!(cur == a.dest)) {
            cur.row += dr;
            cur.col += dc;
            if (occ.filled(cur))
                throw std::logic_error("apply_transfer: straight path is not clear");
        }
    }
    for (const Assignment& a : op.assignments) occ.remove(a.source);
    for (const Assignment& a : op.assignments) occ.add(a.dest);
}

namespace {

// Logs one op as the physical event sequence of the tweezer row: one capture,
// then a sweep to each stop in ascending length with the atoms still held,
// releasing at every stop.
void log_transfer(MoveLog& log, const TransferOp& op) {
    const int op_id = log.begin_op(Stage::Compression);
    const Site step = inward_step(op.side);

    std::vector<Site> sources;
    sources.reserve(op.assignments.size());
    for (const Assignment& a : op.assignments) sources.push_back(a.source);
    log.capture(op_id, std::move(sources));

    int traveled = 0;
    std::vector<Assignment> held = op.assignments;
    for (int stop : op.distinct_lengths) {
        std::vector<Site> positions;
        positions.reserve(held.size());
        for (const Assignment& a : held)
            positions.push_back({a.source.row + step.row * traveled,
                                 a.source.col + step.col * traveled});
        log.sweep(op_id, std::move(positions), step.row, step.col, stop - traveled);
        traveled = stop;

        std::vector<Site> dropped;
        std::erase_if(held, [&](const Assignment& a) {
            if (a.length != stop) return false;
            dropped.push_back(a.dest);
            return true;
        });
        log.release(op_id, std::move(dropped));
    }
}

} // namespace

Occupancy run_compression(const Occupancy& initial, const GridSpec& spec, Protocol protocol,
                          MoveLog& log) {
    Occupancy occ = initial;
    const int layers = max_layer(spec);
    for (int k = 1; k <= layers; ++k) {
        for (SideId side : kSideOrder) {
            const auto movable = find_movable(occ, spec, k, side);
            for (const TransferOp& op : plan_side(movable, protocol, k, side)) {
                apply_transfer(occ, op);
                log_transfer(log, op);
            }
        }
    }
    return occ;
}

} // namespace rearr
