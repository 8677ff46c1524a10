#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rearr {

struct Site {
    int row = 0;
    int col = 0;

    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

inline int manhattan(Site a, Site b) {
    return (a.row > b.row ? a.row - b.row : b.row - a.row) +
           (a.col > b.col ? a.col - b.col : b.col - a.col);
}

enum class ReservoirMode { Default, Saturated, Explicit };

// Geometry of one run: an array_len x array_len trap grid with a centered
// target_len x target_len block that has to end up fully occupied.
struct GridSpec {
    int target_len = 0;   // L, target block side; N = L^2
    int array_len = 0;    // L', initial array side
    double fill = 0.0;    // p, per-trap loading probability
    int offset = 0;       // target block starts at (offset, offset)

    int target_sites() const { return target_len * target_len; }
    int grid_sites() const { return array_len * array_len; }

    bool in_grid(Site s) const {
        return s.row >= 0 && s.row < array_len && s.col >= 0 && s.col < array_len;
    }
    bool in_target(Site s) const {
        return s.row >= offset && s.row < offset + target_len &&
               s.col >= offset && s.col < offset + target_len;
    }

    // Central block of layer 0: rows/cols core_lo()..core_hi() inclusive.
    // 1x1 for odd L, 2x2 for even L.
    int core_lo() const { return offset + (target_len - 1) / 2; }
    int core_hi() const { return offset + target_len / 2; }

    // Expected reservoir-to-target ratio p*L'^2/L^2.
    double reservoir_ratio() const {
        return fill * static_cast<double>(grid_sites()) / target_sites();
    }
};

// Builds a spec for target side L and filling fraction p. Default mode sizes
// the initial array as ceil(L/sqrt(p) + 1); saturated mode as ceil(L*sqrt(3/p)),
// large enough that the reservoir saturates the planner. Explicit mode takes
// the caller's L'.
GridSpec make_spec(int target_len, double fill, ReservoirMode mode, int explicit_array_len = 0);

enum class SideId { Top = 0, Left = 1, Bottom = 2, Right = 3 };
inline constexpr std::array<SideId, 4> kSideOrder = {SideId::Top, SideId::Left,
                                                     SideId::Bottom, SideId::Right};

// One concentric square ring of sites. Sides are stored in counterclockwise
// processing order (top, left, bottom, right as seen on screen with row 0 on
// top); each side owns the corner it reaches first, so the four sides
// partition the ring. Sides are clipped to the grid and may be empty.
struct LayerRing {
    int index = 0;
    std::array<std::vector<Site>, 4> sides;

    const std::vector<Site>& side(SideId id) const { return sides[static_cast<int>(id)]; }
    std::size_t site_count() const {
        return sides[0].size() + sides[1].size() + sides[2].size() + sides[3].size();
    }
};

// Ring index of a site, concentric with the target block: 0 at the central
// block, increasing outward by one per square shell.
int layer_of(Site s, const GridSpec& spec);

// The four clipped sides of ring k (k >= 1). Throws std::invalid_argument for
// k < 1; a ring entirely off-grid yields four empty sides.
LayerRing ring_sides(int k, const GridSpec& spec);

// Largest ring index that still intersects the grid.
int max_layer(const GridSpec& spec);

// Step direction that points from a side of a ring toward the target center.
inline Site inward_step(SideId side) {
    switch (side) {
        case SideId::Top: return {1, 0};
        case SideId::Left: return {0, 1};
        case SideId::Bottom: return {-1, 0};
        case SideId::Right: return {0, -1};
    }
    return {0, 0};
}

} // namespace rearr
