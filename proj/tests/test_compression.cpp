#include <doctest.h>

#include <set>
#include <stdexcept>

#include "compression.hpp"
#include "postprocess.hpp"
#include "rng.hpp"

using namespace rearr;

namespace {

GridSpec whole_grid_spec() { return make_spec(6, 0.5, ReservoirMode::Explicit, 6); }

// 6x6 board used throughout the worked examples: layer-0 block holds one
// atom at (2,2); layer-1 top side holds atoms at (1,2) and (1,3).
Occupancy trace_board() {
    return Occupancy::from_text(
        "101000\n"
        "001100\n"
        "001000\n"
        "000000\n"
        "000000\n"
        "000000\n");
}

std::vector<Assignment> lengths_to_assignments(const std::vector<int>& lengths) {
    std::vector<Assignment> out;
    int col = 0;
    for (int len : lengths) {
        out.push_back({{0, col}, {len, col}, len});
        ++col;
    }
    return out;
}

long total_captures(const std::vector<TransferOp>& ops) {
    long n = 0;
    for (const auto& op : ops) n += op.captures();
    return n;
}
long total_releases(const std::vector<TransferOp>& ops, bool cont) {
    long n = 0;
    for (const auto& op : ops) n += op.releases(cont);
    return n;
}
long total_distance(const std::vector<TransferOp>& ops) {
    long n = 0;
    for (const auto& op : ops) n += op.bus_distance();
    return n;
}

} // namespace

TEST_CASE("find_movable scans inward to the deepest clear target trap") {
    const GridSpec spec = whole_grid_spec();
    const Occupancy occ = trace_board();
    const auto moves = find_movable(occ, spec, 1, SideId::Top);
    REQUIRE(moves.size() == 1);
    // (1,2) is blocked by the atom at (2,2); (1,3) rides down to (3,3).
    CHECK(moves[0].source == Site{1, 3});
    CHECK(moves[0].dest == Site{3, 3});
    CHECK(moves[0].length == 2);
}

TEST_CASE("find_movable returns nothing when the inner region is full") {
    const GridSpec spec = whole_grid_spec();
    Occupancy occ(6, 6);
    for (int r = 2; r <= 3; ++r)
        for (int c = 2; c <= 3; ++c) occ.add({r, c});
    occ.add({1, 2});
    occ.add({1, 3});
    CHECK(find_movable(occ, spec, 1, SideId::Top).empty());
}

TEST_CASE("plan_side batching per protocol matches the counting rules") {
    const auto assignments = lengths_to_assignments({1, 2, 2, 3});

    const auto full = plan_side(assignments, Protocol::FullParallel, 2, SideId::Top);
    REQUIRE(full.size() == 1);
    CHECK(total_captures(full) == 1);
    CHECK(total_releases(full, false) == 3);
    CHECK(total_distance(full) == 3);
    CHECK(total_releases(full, true) == 1);

    const auto partial = plan_side(assignments, Protocol::PartialParallel, 2, SideId::Top);
    REQUIRE(partial.size() == 3);
    CHECK(total_captures(partial) == 3);
    CHECK(total_releases(partial, false) == 3);
    CHECK(total_distance(partial) == 1 + 2 + 3);

    const auto single = plan_side(assignments, Protocol::SingleTweezer, 2, SideId::Top);
    REQUIRE(single.size() == 4);
    CHECK(total_captures(single) == 4);
    CHECK(total_releases(single, false) == 4);
    CHECK(total_distance(single) == 1 + 2 + 2 + 3);

    CHECK(plan_side({}, Protocol::FullParallel, 2, SideId::Top).empty());
}

TEST_CASE("apply_transfer moves atoms and conserves their number") {
    const GridSpec spec = whole_grid_spec();
    Occupancy occ = trace_board();
    const int before = occ.atom_count();
    const auto moves = find_movable(occ, spec, 1, SideId::Top);
    const auto ops = plan_side(moves, Protocol::FullParallel, 1, SideId::Top);
    REQUIRE(ops.size() == 1);
    apply_transfer(occ, ops[0]);
    CHECK_FALSE(occ.filled({1, 3}));
    CHECK(occ.filled({3, 3}));
    CHECK(occ.atom_count() == before);
}

TEST_CASE("apply_transfer applies parallel assignments in adjacent columns") {
    Occupancy occ(6, 6);
    occ.add({1, 2});
    occ.add({1, 3});
    TransferOp op{1, SideId::Top, {{{1, 2}, {3, 2}, 2}, {{1, 3}, {3, 3}, 2}}, {2}};
    apply_transfer(occ, op);
    CHECK(occ.filled({3, 2}));
    CHECK(occ.filled({3, 3}));
    CHECK(occ.atom_count() == 2);
}

TEST_CASE("apply_transfer fails loudly on stale plans") {
    Occupancy occ(6, 6);
    occ.add({1, 2});
    occ.add({2, 2});  // blocks the planned path
    TransferOp op{1, SideId::Top, {{{1, 2}, {3, 2}, 2}}, {2}};
    CHECK_THROWS_AS(apply_transfer(occ, op), std::logic_error);

    Occupancy missing(6, 6);
    TransferOp op2{1, SideId::Top, {{{1, 2}, {3, 2}, 2}}, {2}};
    CHECK_THROWS_AS(apply_transfer(missing, op2), std::logic_error);
}

TEST_CASE("run_compression does nothing on full or empty boards") {
    const GridSpec spec = whole_grid_spec();

    Occupancy full(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) full.add({r, c});
    MoveLog log_full;
    const Occupancy out_full = run_compression(full, spec, Protocol::FullParallel, log_full);
    CHECK(log_full.empty());
    CHECK(out_full == full);

    Occupancy empty(6, 6);
    MoveLog log_empty;
    const Occupancy out_empty = run_compression(empty, spec, Protocol::FullParallel, log_empty);
    CHECK(log_empty.empty());
    CHECK(out_empty == empty);
}

TEST_CASE("compression conserves atoms and replays collision-free") {
    SplitMix64 seeds(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int L = 3 + static_cast<int>(seeds.next_u64() % 8);
        const GridSpec spec = make_spec(L, 0.5, ReservoirMode::Default);
        const Occupancy initial = load_stochastic(spec, seeds.next_u64());
        MoveLog log;
        const Occupancy out = run_compression(initial, spec, Protocol::FullParallel, log);
        CHECK(out.atom_count() == initial.atom_count());
        CHECK(replay(initial, log) == out);
    }
}

TEST_CASE("every planned destination was empty, in-target, and deepest") {
    const GridSpec spec = make_spec(8, 0.5, ReservoirMode::Default);
    const Occupancy occ = load_stochastic(spec, 31);
    for (int k = 1; k <= max_layer(spec); ++k) {
        for (SideId side : kSideOrder) {
            for (const Assignment& a : find_movable(occ, spec, k, side)) {
                CHECK(spec.in_target(a.dest));
                CHECK_FALSE(occ.filled(a.dest));
                CHECK(straight_clear(occ, a.source, a.dest));
                // Deepest: the next inner site along the line is filled,
                // outside the inner region, or not a target trap anymore.
                const Site step = inward_step(side);
                const Site next{a.dest.row + step.row, a.dest.col + step.col};
                const bool deeper_exists = spec.in_grid(next) && layer_of(next, spec) < k &&
                                           !occ.filled(next) && spec.in_target(next);
                CHECK_FALSE(deeper_exists);
            }
        }
    }
}

TEST_CASE("protocols agree on the final board and order their costs") {
    SplitMix64 seeds(99);
    TimeModel tm;
    for (int trial = 0; trial < 25; ++trial) {
        const int L = 4 + static_cast<int>(seeds.next_u64() % 7);
        const GridSpec spec = make_spec(L, 0.5, ReservoirMode::Default);
        const Occupancy initial = load_stochastic(spec, seeds.next_u64());

        MoveLog lf, lp, ls;
        const Occupancy of = run_compression(initial, spec, Protocol::FullParallel, lf);
        const Occupancy op = run_compression(initial, spec, Protocol::PartialParallel, lp);
        const Occupancy os = run_compression(initial, spec, Protocol::SingleTweezer, ls);
        CHECK(of == op);
        CHECK(of == os);

        const Metrics mf = tally(lf), mp = tally(lp), ms = tally(ls);
        CHECK(mf.C() + mf.R() <= mp.C() + mp.R());
        CHECK(mp.C() + mp.R() <= ms.C() + ms.R());
        CHECK(mf.D() <= mp.D());
        CHECK(mp.D() <= ms.D());
        CHECK(time_of(mf, tm) <= time_of(mp, tm));
        CHECK(time_of(mp, tm) <= time_of(ms, tm));
    }
}

TEST_CASE("merged releases count one per transfer") {
    const GridSpec spec = make_spec(8, 0.5, ReservoirMode::Default);
    const Occupancy initial = load_stochastic(spec, 23);
    MoveLog log;
    run_compression(initial, spec, Protocol::FullParallel, log);
    std::set<int> ops;
    for (const LogEvent& e : log.events()) ops.insert(e.op_id);
    const Metrics merged = tally(log, true);
    CHECK(merged.R_para() == merged.C_para());
    CHECK(merged.R_para() == static_cast<long>(ops.size()));
}

TEST_CASE("merged-release accounting never changes boards or distance") {
    const GridSpec spec = make_spec(6, 0.5, ReservoirMode::Default);
    const Occupancy initial = load_stochastic(spec, 5);
    MoveLog log;
    const Occupancy out = run_compression(initial, spec, Protocol::FullParallel, log);
    const Metrics stops = tally(log, false);
    const Metrics merged = tally(log, true);
    CHECK(out == replay(initial, log));
    CHECK(stops.D() == merged.D());
    CHECK(stops.C() == merged.C());
    CHECK(merged.R_para() <= stops.R_para());
}
