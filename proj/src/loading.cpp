#include "loading.hpp"

#include <sstream>
#include <stdexcept>

#include "rng.hpp"

namespace rearr {

std::string Occupancy::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(height_) * (width_ + 1));
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c)
            out.push_back(filled(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Occupancy Occupancy::from_text(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty())
        throw std::invalid_argument("board snapshot is empty");
    const int width = static_cast<int>(rows.front().size());
    Occupancy occ(static_cast<int>(rows.size()), width);
    for (int r = 0; r < occ.height(); ++r) {
        if (static_cast<int>(rows[r].size()) != width)
            throw std::invalid_argument("board snapshot has ragged rows");
        for (int c = 0; c < width; ++c) {
            const char ch = rows[r][c];
            if (ch == '1')
                occ.add({r, c});
            else if (ch != '0')
                throw std::invalid_argument("board snapshot may contain only '0' and '1'");
        }
    }
    return occ;
}

Occupancy load_stochastic(const GridSpec& spec, uint64_t seed) {
    Occupancy occ(spec.array_len, spec.array_len);
    SplitMix64 rng(seed);
    for (int r = 0; r < spec.array_len; ++r)
        for (int c = 0; c < spec.array_len; ++c)
            if (rng.bernoulli(spec.fill)) occ.add({r, c});
    return occ;
}

double reservoir_ratio(const GridSpec& spec) {
    return spec.reservoir_ratio();
}

double realized_ratio(const Occupancy& occ, const GridSpec& spec) {
    return static_cast<double>(occ.atom_count()) / spec.target_sites();
}

int target_vacancies(const Occupancy& occ, const GridSpec& spec) {
    int vacancies = 0;
    for (int r = spec.offset; r < spec.offset + spec.target_len; ++r)
        for (int c = spec.offset; c < spec.offset + spec.target_len; ++c)
            vacancies += !occ.filled(r, c);
    return vacancies;
}

} // namespace rearr
