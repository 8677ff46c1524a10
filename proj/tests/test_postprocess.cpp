#include <doctest.h>

#include <stdexcept>

#include "compression.hpp"
#include "postprocess.hpp"
#include "rng.hpp"

using namespace rearr;

TEST_CASE("remaining_vacancies orders innermost first, then row, then column") {
    const GridSpec spec = make_spec(4, 0.5, ReservoirMode::Explicit, 6);  // target rows/cols 1..4
    Occupancy occ(6, 6);
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) occ.add({r, c});
    occ.remove({1, 1});  // layer 1
    occ.remove({2, 3});  // layer 0
    occ.remove({2, 2});  // layer 0
    occ.remove({4, 2});  // layer 1
    const auto vacancies = remaining_vacancies(occ, spec);
    REQUIRE(vacancies.size() == 4);
    CHECK(vacancies[0] == Site{2, 2});
    CHECK(vacancies[1] == Site{2, 3});
    CHECK(vacancies[2] == Site{1, 1});
    CHECK(vacancies[3] == Site{4, 2});

    Occupancy full(6, 6);
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) full.add({r, c});
    CHECK(remaining_vacancies(full, spec).empty());
}

TEST_CASE("vacancy list of the worked 6x6 board after stage 1") {
    const GridSpec spec = make_spec(6, 0.5, ReservoirMode::Explicit, 6);
    const Occupancy initial = Occupancy::from_text(
        "101000\n"
        "001100\n"
        "001000\n"
        "000000\n"
        "000000\n"
        "000000\n");
    MoveLog log;
    const Occupancy compressed = run_compression(initial, spec, Protocol::FullParallel, log);
    // Hand trace: only (1,3)->(3,3) moves ((1,2) is blocked by (2,2); (0,2)
    // is blocked by (1,2); (0,0) is a corner with no inward line).
    CHECK(compressed.filled({3, 3}));
    CHECK_FALSE(compressed.filled({1, 3}));
    const std::vector<Site> expected = {
        {2, 3}, {3, 2},                                                  // layer 0
        {1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {4, 1},  // layer 1
        {4, 2}, {4, 3}, {4, 4},
        {0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 5}, {2, 0}, {2, 5},  // layer 2
        {3, 0}, {3, 5}, {4, 0}, {4, 5}, {5, 0}, {5, 1}, {5, 2}, {5, 3},
        {5, 4}, {5, 5}};
    CHECK(remaining_vacancies(compressed, spec) == expected);
}

TEST_CASE("select_source walks straight in from the nearest reservoir atom") {
    const GridSpec spec = make_spec(4, 0.5, ReservoirMode::Explicit, 8);  // target rows/cols 2..5
    Occupancy occ(8, 8);
    occ.add({0, 5});
    const auto move = select_source(occ, spec, {2, 5});  // vacancy on the target edge
    REQUIRE(move.has_value());
    CHECK(move->source == Site{0, 5});
    CHECK(move->path.length() == 2);
    CHECK(move->path.segments().size() == 1);
}

TEST_CASE("select_source breaks distance ties by smaller row then column") {
    const GridSpec spec = make_spec(2, 0.5, ReservoirMode::Explicit, 6);  // target rows/cols 2..3
    Occupancy occ(6, 6);
    occ.add({0, 2});  // two steps above the vacancy
    occ.add({4, 2});  // two steps below
    const auto move = select_source(occ, spec, {2, 2});
    REQUIRE(move.has_value());
    CHECK(move->source == Site{0, 2});
}

TEST_CASE("select_source reports enclosed vacancies as unreachable") {
    const GridSpec spec = make_spec(4, 0.5, ReservoirMode::Explicit, 8);  // target rows/cols 2..5
    Occupancy occ(8, 8);
    occ.add({0, 0});  // reservoir atom far away
    // Wall the vacancy with target-interior atoms, which are not candidates
    // and may not be crossed.
    occ.add({2, 3});
    occ.add({4, 3});
    occ.add({3, 2});
    occ.add({3, 4});
    CHECK_FALSE(select_source(occ, spec, {3, 3}).has_value());
}

TEST_CASE("select_source falls back to a multi-turn route when needed") {
    const GridSpec spec = make_spec(4, 0.5, ReservoirMode::Explicit, 8);  // target rows/cols 2..5
    Occupancy occ(8, 8);
    // Target full except an S-shaped corridor ending at the vacancy (4,4);
    // the only reservoir atom sits at the corridor mouth and needs three
    // straight runs to thread it.
    for (int r = 2; r <= 5; ++r)
        for (int c = 2; c <= 5; ++c) occ.add({r, c});
    for (Site s : {Site{2, 3}, Site{3, 3}, Site{3, 4}, Site{4, 4}}) occ.remove(s);
    occ.add({1, 3});
    const auto move = select_source(occ, spec, {4, 4});
    REQUIRE(move.has_value());
    CHECK(move->source == Site{1, 3});
    CHECK(move->path.length() == 4);
    CHECK(move->path.segments().size() == 3);
}

TEST_CASE("run_postprocess fills everything reachable and logs one op per fill") {
    const GridSpec spec = make_spec(3, 0.5, ReservoirMode::Explicit, 7);  // target rows/cols 2..4
    Occupancy occ(7, 7);
    for (int r = 2; r <= 4; ++r)
        for (int c = 2; c <= 4; ++c) occ.add({r, c});
    occ.remove({2, 3});  // vacancy on the target edge
    occ.add({0, 6});

    MoveLog log;
    const PostprocessResult res = run_postprocess(occ, spec, log);
    CHECK(res.unfilled.empty());
    CHECK(res.board.filled({2, 3}));
    CHECK(res.board.atom_count() == occ.atom_count());

    const Metrics m = tally(log);
    CHECK(m.C_post() == 1);
    CHECK(m.R_post() == 1);
    CHECK(m.D_post() == manhattan({0, 6}, {2, 3}));
    CHECK(replay(occ, log) == res.board);
}

TEST_CASE("run_postprocess is the identity when no vacancies remain") {
    const GridSpec spec = make_spec(2, 1.0, ReservoirMode::Explicit, 4);
    Occupancy occ(4, 4);
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c) occ.add({r, c});
    MoveLog log;
    const PostprocessResult res = run_postprocess(occ, spec, log);
    CHECK(log.empty());
    CHECK(res.board == occ);
    CHECK(res.unfilled.empty());
}

TEST_CASE("postprocess invariants over random compressed boards") {
    SplitMix64 seeds(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const int L = 3 + static_cast<int>(seeds.next_u64() % 8);
        const GridSpec spec = make_spec(L, 0.5, ReservoirMode::Default);
        const Occupancy initial = load_stochastic(spec, seeds.next_u64());
        MoveLog log;
        const Occupancy compressed = run_compression(initial, spec, Protocol::FullParallel, log);
        const PostprocessResult res = run_postprocess(compressed, spec, log);

        CHECK(res.board.atom_count() == initial.atom_count());
        CHECK(replay(initial, log) == res.board);
        if (res.unfilled.empty()) {
            CHECK(target_vacancies(res.board, spec) == 0);
        } else {
            CHECK(target_vacancies(res.board, spec) == static_cast<int>(res.unfilled.size()));
        }
        // Every postprocess capture site lies outside the target block.
        for (const LogEvent& e : log.events()) {
            if (e.stage == Stage::Postprocess && e.kind == LogEvent::Kind::Capture)
                for (Site s : e.sites) CHECK_FALSE(spec.in_target(s));
        }
    }
}
