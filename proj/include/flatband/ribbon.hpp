#pragma once

#include <numeric>
#include <vector>

namespace flatband {

// Ribbon graph given by rotations of half-edges at each vertex. Each edge
// pairs two half-edges and may be twisted. Boundary components of the
// thickened graph are counted with a union-find over half-edge sides.
struct RibbonGraph {
    std::vector<std::vector<int>> rotation; // half-edge ids, clockwise, per vertex
    struct Edge { int h1, h2; bool twisted; };
    std::vector<Edge> edges;
    int half_edge_count = 0;
};

inline int boundary_count(const RibbonGraph& g) {
    // node 2h = side of h facing the previous half-edge, 2h+1 = facing the next
    std::vector<int> parent(2 * g.half_edge_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& rot : g.rotation) {
        const int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i) unite(2 * rot[i] + 1, 2 * rot[(i + 1) % d]);
    }
    for (const auto& e : g.edges) {
        if (e.twisted) {
            unite(2 * e.h1, 2 * e.h2);
            unite(2 * e.h1 + 1, 2 * e.h2 + 1);
        } else {
            unite(2 * e.h1, 2 * e.h2 + 1);
            unite(2 * e.h1 + 1, 2 * e.h2);
        }
    }
    int c = 0;
    for (int x = 0; x < 2 * g.half_edge_count; ++x)
        if (find(x) == x) ++c;
    return c;
}

} // namespace flatband
