#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace rearr {

// Dense boolean grid of trap occupation; the mutable world state every stage
// reads and writes. Kept flat for scan speed.
class Occupancy {
public:
    Occupancy() = default;
    Occupancy(int height, int width)
        : height_(height), width_(width), cells_(static_cast<std::size_t>(height) * width, 0) {}

    int height() const { return height_; }
    int width() const { return width_; }
    int atom_count() const { return atoms_; }

    bool filled(Site s) const { return cells_[index(s)] != 0; }
    bool filled(int row, int col) const { return cells_[index({row, col})] != 0; }

    void add(Site s) {
        auto& c = cells_[index(s)];
        atoms_ += (c == 0);
        c = 1;
    }
    void remove(Site s) {
        auto& c = cells_[index(s)];
        atoms_ -= (c != 0);
        c = 0;
    }

    bool in_bounds(Site s) const {
        return s.row >= 0 && s.row < height_ && s.col >= 0 && s.col < width_;
    }

    friend bool operator==(const Occupancy&, const Occupancy&) = default;

    // Snapshot format: one '1'/'0' character per trap, one newline-terminated
    // line per row. Used by the CLI to inject fixed boards into the planner.
    std::string to_text() const;
    static Occupancy from_text(const std::string& text);

private:
    std::size_t index(Site s) const {
        return static_cast<std::size_t>(s.row) * width_ + s.col;
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<uint8_t> cells_;
    int atoms_ = 0;
};

// Bernoulli(p) loading of every trap, the post-ejection state of stochastic
// sub-Poissonian loading. Identical (spec, seed) pairs give bit-identical
// boards everywhere.
Occupancy load_stochastic(const GridSpec& spec, uint64_t seed);

// Expected reservoir-to-target ratio r = p*L'^2/L^2 (from the spec, not the
// sampled board).
double reservoir_ratio(const GridSpec& spec);

// Ratio actually realized by a sampled board: atom_count / N.
double realized_ratio(const Occupancy& occ, const GridSpec& spec);

// Number of empty traps inside the target block.
int target_vacancies(const Occupancy& occ, const GridSpec& spec);

} // namespace rearr
