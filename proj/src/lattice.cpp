#include "lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace rearr {

GridSpec make_spec(int target_len, double fill, ReservoirMode mode, int explicit_array_len) {
    if (target_len < 1)
        throw std::invalid_argument("target side length must be >= 1");
    if (!(fill > 0.0) || fill > 1.0)
        throw std::invalid_argument("filling fraction must be in (0, 1]");

    int array_len = 0;
    switch (mode) {
        case ReservoirMode::Default:
            array_len = static_cast<int>(std::ceil(target_len / std::sqrt(fill) + 1.0));
            break;
        case ReservoirMode::Saturated:
            array_len = static_cast<int>(std::ceil(target_len * std::sqrt(3.0 / fill)));
            break;
        case ReservoirMode::Explicit:
            if (explicit_array_len < target_len)
                throw std::invalid_argument("explicit array side must be >= target side");
            array_len = explicit_array_len;
            break;
    }

    GridSpec spec;
    spec.target_len = target_len;
    spec.array_len = array_len;
    spec.fill = fill;
    spec.offset = (array_len - target_len) / 2;
    return spec;
}

int layer_of(Site s, const GridSpec& spec) {
    // Twice the distance from the target-block center (which sits on a half
    // site for even L); flooring halves recovers the ring index for both
    // parities.
    const int m = 2 * spec.offset + spec.target_len - 1;
    const int dr = std::abs(2 * s.row - m);
    const int dc = std::abs(2 * s.col - m);
    return (dr > dc ? dr : dc) / 2;
}

LayerRing ring_sides(int k, const GridSpec& spec) {
    if (k < 1)
        throw std::invalid_argument("ring index must be >= 1 (layer 0 is the central block)");

    LayerRing ring;
    ring.index = k;

    const int lo = spec.core_lo() - k;
    const int hi = spec.core_hi() + k;
    const int n = spec.array_len;
    auto on_grid = [n](int v) { return v >= 0 && v < n; };

    // Counterclockwise on screen: top side right-to-left, then left side
    // top-to-bottom, bottom left-to-right, right side bottom-to-top. Each
    // side includes its leading corner and stops one short of the next
    // side's corner.
    auto& top = ring.sides[static_cast<int>(SideId::Top)];
    auto& left = ring.sides[static_cast<int>(SideId::Left)];
    auto& bottom = ring.sides[static_cast<int>(SideId::Bottom)];
    auto& right = ring.sides[static_cast<int>(SideId::Right)];

    if (on_grid(lo))
        for (int c = hi; c > lo; --c)
            if (on_grid(c)) top.push_back({lo, c});
    if (on_grid(lo))
        for (int r = lo; r < hi; ++r)
            if (on_grid(r)) left.push_back({r, lo});
    if (on_grid(hi))
        for (int c = lo; c < hi; ++c)
            if (on_grid(c)) bottom.push_back({hi, c});
    if (on_grid(hi))
        for (int r = hi; r > lo; --r)
            if (on_grid(r)) right.push_back({r, hi});

    return ring;
}

int max_layer(const GridSpec& spec) {
    const int n = spec.array_len - 1;
    int k = layer_of({0, 0}, spec);
    k = std::max(k, layer_of({0, n}, spec));
    k = std::max(k, layer_of({n, 0}, spec));
    k = std::max(k, layer_of({n, n}, spec));
    return k;
}

} // namespace rearr
