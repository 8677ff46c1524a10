#include <doctest.h>

#include <stdexcept>

#include <set>

#include "lattice.hpp"
#include "oracles.hpp"

using namespace rearr;

TEST_CASE("make_spec sizes the initial array per reservoir mode") {
    const GridSpec d = make_spec(14, 0.5, ReservoirMode::Default);
    CHECK(d.array_len == 21);
    CHECK(d.offset == 3);

    const GridSpec s = make_spec(14, 0.5, ReservoirMode::Saturated);
    CHECK(s.array_len == 35);

    const GridSpec tiny = make_spec(1, 1.0, ReservoirMode::Default);
    CHECK(tiny.array_len == 2);
    CHECK(tiny.offset == 0);

    const GridSpec ex = make_spec(6, 0.5, ReservoirMode::Explicit, 9);
    CHECK(ex.array_len == 9);
    CHECK(ex.offset == 1);
}

TEST_CASE("make_spec rejects bad parameters") {
    CHECK_THROWS_AS(make_spec(0, 0.5, ReservoirMode::Default), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(4, 0.0, ReservoirMode::Default), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(4, 1.5, ReservoirMode::Default), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(4, 0.5, ReservoirMode::Explicit, 3), std::invalid_argument);
}

TEST_CASE("layer_of matches the ring enumeration oracle") {
    const GridSpec odd = make_spec(5, 1.0, ReservoirMode::Explicit, 5);
    CHECK(layer_of({2, 2}, odd) == 0);
    CHECK(layer_of({0, 4}, odd) == 2);
    CHECK(layer_of({0, 4}, odd) == oracle::layer_of({0, 4}, odd));

    const GridSpec even = make_spec(6, 1.0, ReservoirMode::Explicit, 6);
    CHECK(layer_of({2, 3}, even) == 0);
    CHECK(layer_of({1, 2}, even) == 1);

    for (const GridSpec& spec :
         {odd, even, make_spec(4, 0.5, ReservoirMode::Default), make_spec(3, 0.5, ReservoirMode::Explicit, 10)}) {
        for (int r = 0; r < spec.array_len; ++r)
            for (int c = 0; c < spec.array_len; ++c)
                CHECK(layer_of({r, c}, spec) == oracle::layer_of({r, c}, spec));
    }
}

TEST_CASE("ring_sides rejects the central block index") {
    const GridSpec spec = make_spec(6, 1.0, ReservoirMode::Explicit, 6);
    CHECK_THROWS_AS(ring_sides(0, spec), std::invalid_argument);
}

TEST_CASE("ring_sides covers each ring once, against the oracle") {
    const GridSpec even = make_spec(6, 1.0, ReservoirMode::Explicit, 6);
    const LayerRing k1 = ring_sides(1, even);
    CHECK(k1.site_count() == oracle::ring_sites(1, even).size());
    CHECK(k1.site_count() == 12);
    for (SideId id : kSideOrder) CHECK(k1.side(id).size() == 3);

    const GridSpec odd = make_spec(5, 1.0, ReservoirMode::Explicit, 5);
    const LayerRing k2 = ring_sides(2, odd);
    CHECK(k2.site_count() == 16);
    for (SideId id : kSideOrder) CHECK(k2.side(id).size() == 4);

    // Off-grid rings are all-empty.
    const LayerRing off = ring_sides(40, odd);
    CHECK(off.site_count() == 0);
}

TEST_CASE("ring side traversal is counterclockwise with owned leading corners") {
    const GridSpec spec = make_spec(6, 1.0, ReservoirMode::Explicit, 6);
    const LayerRing ring = ring_sides(2, spec);
    // Ring 2 is the 6x6 boundary. Top runs right-to-left from the top-right
    // corner; left runs downward from the top-left corner.
    CHECK(ring.side(SideId::Top).front() == Site{0, 5});
    CHECK(ring.side(SideId::Top).back() == Site{0, 1});
    CHECK(ring.side(SideId::Left).front() == Site{0, 0});
    CHECK(ring.side(SideId::Left).back() == Site{4, 0});
    CHECK(ring.side(SideId::Bottom).front() == Site{5, 0});
    CHECK(ring.side(SideId::Right).front() == Site{5, 5});
    CHECK(ring.side(SideId::Right).back() == Site{1, 5});
}

TEST_CASE("max_layer agrees with the oracle") {
    CHECK(max_layer(make_spec(6, 1.0, ReservoirMode::Explicit, 6)) == 2);
    CHECK(max_layer(make_spec(5, 1.0, ReservoirMode::Explicit, 5)) == 2);
    CHECK(max_layer(make_spec(1, 1.0, ReservoirMode::Explicit, 1)) == 0);
    for (int L : {1, 2, 3, 6, 9}) {
        for (int extra : {0, 1, 2, 7}) {
            const GridSpec spec = make_spec(L, 0.5, ReservoirMode::Explicit, L + extra);
            CHECK(max_layer(spec) == oracle::max_layer(spec));
        }
    }
}

TEST_CASE("rings partition every grid exactly once (all specs up to L'=64)") {
    long violations = 0;
    for (int L = 1; L <= 64; ++L) {
        for (int Lp = L; Lp <= 64; ++Lp) {
            const GridSpec spec = make_spec(L, 0.5, ReservoirMode::Explicit, Lp);
            std::vector<char> seen(static_cast<std::size_t>(spec.grid_sites()), 0);
            std::size_t total = 0;
            auto mark = [&](Site s, int expect_layer) {
                if (layer_of(s, spec) != expect_layer) ++violations;  // concentricity
                char& cell = seen[static_cast<std::size_t>(s.row) * Lp + s.col];
                if (cell) ++violations;  // double coverage
                cell = 1;
                ++total;
            };
            // Ring 0 is the residual central block.
            for (int r = spec.core_lo(); r <= spec.core_hi(); ++r)
                for (int c = spec.core_lo(); c <= spec.core_hi(); ++c) mark({r, c}, 0);
            for (int k = 1; k <= max_layer(spec); ++k) {
                const LayerRing ring = ring_sides(k, spec);
                for (SideId id : kSideOrder)
                    for (Site s : ring.side(id)) mark(s, k);
            }
            if (total != static_cast<std::size_t>(spec.grid_sites())) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("layer_of grows monotonically walking away from the center") {
    const GridSpec spec = make_spec(7, 0.5, ReservoirMode::Explicit, 18);
    const int cr = spec.core_lo();
    for (const Site step : {Site{0, 1}, Site{0, -1}, Site{1, 0}, Site{-1, 0}}) {
        int prev = 0;
        Site cur{cr, cr};
        while (spec.in_grid(cur)) {
            const int k = layer_of(cur, spec);
            CHECK(k >= prev);
            prev = k;
            cur.row += step.row;
            cur.col += step.col;
        }
    }
}
