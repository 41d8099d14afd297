#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "diagram.hpp"
#include "topology.hpp"

namespace flatband {

// Boundary link of a one-disc presentation as a planar diagram. Every
// passage of two bands gives four crossings, one per pair of band edges.
//
// Frame of a passage, seen from the lower-numbered band a: a heads east
// (end 0 to end 1) with its left edge on the north side. Band b heads
// south when it enters from a's left, north otherwise.
//
// The boundary runs east along the disc edge, climbs the west edge of each
// band it meets and comes down on the far side. So a band's left edge is
// walked from end 0 to end 1 and its right edge the other way.
inline PlanarDiagram boundary_diagram(const SurfacePresentation& p) {
    const int n = p.band_count();
    const int m = 2 * n;
    auto pos = end_positions(p);

    struct Passage {
        int a = 0, b = 0;
        bool a_over = false;
        bool b_south = false;
    };
    std::map<int, Passage> passages;
    for (int a = 0; a < n; ++a)
        for (const auto& e : p.events[a])
            if (a < e.other) passages[e.id] = {a, e.other, e.over, e.from_left};

    // crossing index of (edge of a, edge of b); edge 0 = left, 1 = right
    std::map<int, int> base;
    for (const auto& [id, _] : passages) base.emplace(id, 4 * static_cast<int>(base.size()));

    struct Visit {
        int crossing;
        int slot; // entry slot
    };
    constexpr int S = 0, E = 1, N = 2, W = 3;

    // Crossings met along one edge of `band` while passing event `id`,
    // travelling along the band from end 0 to end 1 when `forward`.
    auto visits = [&](int band, int edge, bool forward, int id) {
        const Passage& q = passages.at(id);
        const int c0 = base.at(id);
        std::vector<Visit> out;
        if (band == q.a) {
            const bool east = forward;
            // b's left edge sits east of centre when b heads south
            const int west_edge = q.b_south ? 1 : 0;
            const int order[2] = {east ? west_edge : 1 - west_edge, east ? 1 - west_edge : west_edge};
            for (int eb : order) out.push_back({c0 + 2 * edge + eb, east ? W : E});
        } else {
            const bool south = forward == q.b_south;
            // a's left edge is the north one
            const int order[2] = {south ? 0 : 1, south ? 1 : 0};
            for (int ea : order) out.push_back({c0 + 2 * ea + edge, south ? N : S});
        }
        return out;
    };

    PlanarDiagram d;
    d.x.assign(4 * passages.size(), {-1, -1, -1, -1});
    d.over.assign(4 * passages.size(), 0);
    for (const auto& [id, q] : passages)
        for (int k = 0; k < 4; ++k) d.over[base.at(id) + k] = q.a_over ? 1 : 0;

    std::vector<bool> seen(m, false);
    int next_edge = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        std::vector<Visit> walk;
        for (int x = s; !seen[x];) {
            seen[x] = true;
            const BandEnd be = p.order[x];
            const bool forward = be.end == 0;
            const int edge = forward ? 0 : 1;
            const auto& ev = p.events[be.band];
            const int len = static_cast<int>(ev.size());
            for (int i = 0; i < len; ++i) {
                const auto& e = ev[forward ? i : len - 1 - i];
                for (auto v : visits(be.band, edge, forward, e.id)) walk.push_back(v);
            }
            x = (pos[be.band][1 - be.end] + 1) % m;
        }
        if (walk.empty()) {
            ++d.free_loops;
            continue;
        }
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            const Visit& from = walk[i];
            const Visit& to = walk[(i + 1) % len];
            const int e = next_edge++;
            d.x[from.crossing][(from.slot + 2) % 4] = e;
            d.x[to.crossing][to.slot] = e;
            d.head[e] = {to.crossing, to.slot};
        }
    }
    return d;
}

inline GaussCode boundary_gauss_code(const SurfacePresentation& p) { return gauss_code(boundary_diagram(p)); }

} // namespace flatband
