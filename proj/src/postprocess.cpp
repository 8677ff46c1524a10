#include "postprocess.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace rearr {

std::vector<Site> remaining_vacancies(const Occupancy& occ, const GridSpec& spec) {
    std::vector<Site> vacancies;
    for (int r = spec.offset; r < spec.offset + spec.target_len; ++r)
        for (int c = spec.offset; c < spec.offset + spec.target_len; ++c)
            if (!occ.filled(r, c)) vacancies.push_back({r, c});
    std::stable_sort(vacancies.begin(), vacancies.end(), [&](Site a, Site b) {
        const int ka = layer_of(a, spec);
        const int kb = layer_of(b, spec);
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return vacancies;
}

namespace {

// Walks the diamond of sites at Manhattan distance d from center in row-major
// order, calling fn(site) until it returns true. Returns whether fn accepted.
template <typename Fn>
bool scan_ring(Site center, int d, Fn&& fn) {
    for (int dr = -d; dr <= d; ++dr) {
        const int rem = d - std::abs(dr);
        if (fn({center.row + dr, center.col - rem})) return true;
        if (rem != 0 && fn({center.row + dr, center.col + rem})) return true;
    }
    return false;
}

bool is_reservoir(const Occupancy& occ, const GridSpec& spec, Site s) {
    return spec.in_grid(s) && !spec.in_target(s) && occ.filled(s);
}

// Fallback when no candidate has a one-turn route: a breadth-first wave from
// the vacancy through empty traps ranks every reservoir atom by realized
// path length (reservoir atoms are absorbed as endpoints, not expanded).
std::optional<FillMove> bfs_fallback(const Occupancy& occ, const GridSpec& spec, Site vacancy) {
    const int h = occ.height();
    const int w = occ.width();
    auto idx = [w](Site s) { return static_cast<std::size_t>(s.row) * w + s.col; };
    std::vector<int32_t> dist(static_cast<std::size_t>(h) * w, -1);

    std::queue<Site> frontier;
    dist[idx(vacancy)] = 0;
    frontier.push(vacancy);

    Site best{-1, -1};
    int best_len = -1;
    static constexpr Site kNeighborOrder[4] = {{-1, 0}, {0, -1}, {1, 0}, {0, 1}};
    while (!frontier.empty()) {
        const Site cur = frontier.front();
        frontier.pop();
        const int d = dist[idx(cur)];
        if (best_len >= 0 && d + 1 > best_len) break;  // no shorter endpoint possible
        for (const Site n : kNeighborOrder) {
            const Site nxt{cur.row + n.row, cur.col + n.col};
            if (!occ.in_bounds(nxt) || dist[idx(nxt)] >= 0) continue;
            dist[idx(nxt)] = d + 1;
            if (occ.filled(nxt)) {
                // Endpoint candidate; do not expand through it.
                if (is_reservoir(occ, spec, nxt)) {
                    if (best_len < 0 || d + 1 < best_len ||
                        (d + 1 == best_len && nxt < best)) {
                        best = nxt;
                        best_len = d + 1;
                    }
                }
            } else {
                frontier.push(nxt);
            }
        }
    }
    if (best_len < 0) return std::nullopt;

    // Deterministic path from the chosen atom, per the forward search's
    // neighbor-order tie-break.
    auto path = shortest_clear_path(occ, best, vacancy);
    if (!path) return std::nullopt;  // unreachable by construction
    return FillMove{best, vacancy, std::move(*path)};
}

} // namespace

std::optional<FillMove> select_source(const Occupancy& occ, const GridSpec& spec, Site vacancy) {
    // One-turn candidates in ascending Manhattan distance; a one-turn path's
    // length equals that distance, so the first hit is the shortest.
    const int max_d = occ.height() + occ.width();
    for (int d = 1; d <= max_d; ++d) {
        std::optional<FillMove> found;
        scan_ring(vacancy, d, [&](Site s) {
            if (!is_reservoir(occ, spec, s)) return false;
            auto path = one_turn_path(occ, s, vacancy);
            if (!path) return false;
            found = FillMove{s, vacancy, std::move(*path)};
            return true;
        });
        if (found) return found;
    }
    return bfs_fallback(occ, spec, vacancy);
}

PostprocessResult run_postprocess(const Occupancy& initial, const GridSpec& spec, MoveLog& log) {
    PostprocessResult result{initial, {}};
    for (Site vacancy : remaining_vacancies(initial, spec)) {
        auto move = select_source(result.board, spec, vacancy);
        if (!move) {
            result.unfilled.push_back(vacancy);
            continue;
        }
        const int op_id = log.begin_op(Stage::Postprocess);
        log.capture(op_id, {move->source});
        Site cur = move->source;
        for (const PathSegment& seg : move->path.segments()) {
            log.sweep(op_id, {cur}, seg.drow, seg.dcol, seg.steps);
            cur.row += seg.drow * seg.steps;
            cur.col += seg.dcol * seg.steps;
        }
        log.release(op_id, {move->dest});
        result.board.remove(move->source);
        result.board.add(move->dest);
    }
    return result;
}

} // namespace rearr
