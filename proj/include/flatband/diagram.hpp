#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "matrix.hpp"

namespace flatband {

// Oriented link diagram in planar-diagram form. Each crossing lists four
// edge ids counterclockwise starting from its south slot (S, E, N, W).
struct PlanarDiagram {
    std::vector<std::array<int, 4>> x;
    std::vector<int> over;                         // 0: slots 0,2 on top; 1: slots 1,3 on top
    std::map<int, std::pair<int, int>> head;       // edge -> (crossing, slot) where it enters
    int free_loops = 0;                            // crossingless unknotted components

    int crossing_count() const { return static_cast<int>(x.size()); }
};

namespace detail {

inline constexpr std::array<std::array<int, 2>, 4> kSlotDir{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

inline std::array<int, 2> strand_dir(const PlanarDiagram& d, int c, int k) {
    const int e = d.x[c][k];
    const auto& v = d.head.at(e) == std::pair(c, k) ? kSlotDir[k] : kSlotDir[(k + 2) % 4];
    return {-v[0], -v[1]};
}

inline bool incoming(const PlanarDiagram& d, int c, int k) {
    return d.head.at(d.x[c][k % 4]) == std::pair(c, k % 4);
}

} // namespace detail

// Right-handed: +1 when the under strand points 90 degrees counterclockwise
// from the over strand.
inline int crossing_sign(const PlanarDiagram& d, int c) {
    const int o = d.over[c], u = 1 - o;
    auto a = detail::strand_dir(d, c, o), b = detail::strand_dir(d, c, u);
    return a[0] * b[1] - a[1] * b[0] > 0 ? 1 : -1;
}

// Edge cycles, one per component that meets a crossing.
inline std::vector<std::vector<int>> diagram_components(const PlanarDiagram& d) {
    std::map<int, int> comp;
    std::vector<std::vector<int>> out;
    for (const auto& [e0, _] : d.head) {
        if (comp.count(e0)) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        for (int e = e0; !comp.count(e);) {
            comp[e] = id;
            out[id].push_back(e);
            auto [c, k] = d.head.at(e);
            e = d.x[c][(k + 2) % 4];
        }
    }
    return out;
}

inline int link_components(const PlanarDiagram& d) {
    return static_cast<int>(diagram_components(d).size()) + d.free_loops;
}

// Reverse the orientation of the listed components (indices into diagram_components).
inline PlanarDiagram reverse_components(const PlanarDiagram& d, const std::vector<int>& which) {
    PlanarDiagram r = d;
    auto comps = diagram_components(d);
    std::map<int, std::vector<std::pair<int, int>>> ends;
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int k = 0; k < 4; ++k) ends[d.x[c][k]].push_back({c, k});
    for (int w : which)
        for (int e : comps.at(w)) {
            const auto& en = ends[e];
            r.head[e] = en[0] == d.head.at(e) ? en[1] : en[0];
        }
    return r;
}

inline bool diagram_connected(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0) return true;
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int v) {
        while (par[v] != v) v = par[v] = par[par[v]];
        return v;
    };
    std::map<int, int> first;
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            auto [it, fresh] = first.try_emplace(d.x[c][k], c);
            if (!fresh) par[find(c)] = find(it->second);
        }
    for (int c = 0; c < n; ++c)
        if (find(c) != find(0)) return false;
    return true;
}

// Alexander polynomial from the Fox calculus on the Wirtinger presentation.
inline LaurentPoly alexander(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    const int comps = link_components(d);
    if (n == 0) return comps == 1 ? LaurentPoly(1) : LaurentPoly();
    if (d.free_loops > 0 || !diagram_connected(d)) return LaurentPoly();
    std::map<int, int> edge_index;
    for (const auto& [e, _] : d.head) edge_index.emplace(e, static_cast<int>(edge_index.size()));
    std::vector<int> par(edge_index.size());
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int v) {
        while (par[v] != v) v = par[v] = par[par[v]];
        return v;
    };
    for (int c = 0; c < n; ++c) {
        const int o = d.over[c];
        par[find(edge_index[d.x[c][o]])] = find(edge_index[d.x[c][o + 2]]);
    }
    std::map<int, int> arc;
    for (std::size_t i = 0; i < par.size(); ++i) arc.emplace(find(static_cast<int>(i)), static_cast<int>(arc.size()));
    // a component that never goes under splits off
    if (static_cast<int>(arc.size()) != n) return LaurentPoly();
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    const LaurentPoly t = LaurentPoly::t();
    for (int c = 0; c < n; ++c) {
        const int o = d.over[c], u = 1 - o;
        const int k = arc[find(edge_index[d.x[c][o]])];
        int ein = d.x[c][u], eout = d.x[c][u + 2];
        if (!(d.head.at(ein) == std::pair(c, u))) std::swap(ein, eout);
        const int i = arc[find(edge_index[ein])], j = arc[find(edge_index[eout])];
        m[c][k] += LaurentPoly(1) - t;
        if (crossing_sign(d, c) > 0) {
            m[c][i] += t;
            m[c][j] -= LaurentPoly(1);
        } else {
            m[c][i] -= LaurentPoly(1);
            m[c][j] += t;
        }
    }
    PolyMatrix minor(n - 1, std::vector<LaurentPoly>(n - 1));
    for (int r = 1; r < n; ++r)
        for (int c = 1; c < n; ++c) minor[r - 1][c - 1] = m[r][c];
    return det(minor).unit_normal();
}

// Faces as dart cycles: leave crossing c through slot k, arrive at the
// other end (c2, k2), turn to slot k2 + 1.
inline std::vector<std::vector<std::pair<int, int>>> diagram_faces(const PlanarDiagram& d,
                                                                   std::map<std::pair<int, int>, int>& face_of) {
    std::map<int, std::vector<std::pair<int, int>>> ends;
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int k = 0; k < 4; ++k) ends[d.x[c][k]].push_back({c, k});
    auto other = [&](std::pair<int, int> dk) {
        const auto& en = ends.at(d.x[dk.first][dk.second]);
        return en[0] == dk ? en[1] : en[0];
    };
    std::vector<std::vector<std::pair<int, int>>> faces;
    face_of.clear();
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int k = 0; k < 4; ++k) {
            if (face_of.count({c, k})) continue;
            const int f = static_cast<int>(faces.size());
            faces.emplace_back();
            for (std::pair<int, int> cur{c, k}; !face_of.count(cur);) {
                face_of[cur] = f;
                faces[f].push_back(cur);
                auto [c2, k2] = other(cur);
                cur = {c2, (k2 + 1) % 4};
            }
        }
    return faces;
}

// Signature via the Goeritz matrix of a checkerboard colouring with the
// Gordon-Litherland correction. Needs a connected diagram.
inline int signature(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    if (n == 0) return 0;
    if (!diagram_connected(d)) throw Error(ErrorKind::unsupported, "signature needs a connected diagram");
    std::map<std::pair<int, int>, int> face_of;
    auto faces = diagram_faces(d, face_of);
    const int nf = static_cast<int>(faces.size());
    if (nf != n + 2) throw Error(ErrorKind::inconsistent, "diagram is not planar");
    auto corner = [&](int c, int k) { return face_of.at({c, ((k % 4) + 4) % 4}); };
    std::vector<int> col(nf, -1);
    col[0] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < 4; ++k) {
                int a = corner(c, k), b = corner(c, k + 1);
                if (col[a] >= 0 && col[b] < 0) { col[b] = 1 - col[a]; changed = true; }
                if (col[b] >= 0 && col[a] < 0) { col[a] = 1 - col[b]; changed = true; }
            }
    }
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k)
            if (col[corner(c, k)] == col[corner(c, k + 1)])
                throw Error(ErrorKind::inconsistent, "faces are not two-colourable");
    std::vector<int> white_index(nf, -1);
    int w = 0;
    for (int f = 0; f < nf; ++f)
        if (col[f] == 0) white_index[f] = w++;
    IntMatrix g = zero_matrix(w);
    int correction = 0;
    for (int c = 0; c < n; ++c) {
        const int o = d.over[c];
        const int eta = col[corner(c, o + 1)] == 0 ? -1 : 1;
        std::vector<int> wk;
        for (int k = 0; k < 4; ++k)
            if (col[corner(c, k)] == 0) wk.push_back(k);
        const int a = white_index[corner(c, wk[0])], b = white_index[corner(c, wk[1])];
        if (a != b) {
            g[a][b] -= eta;
            g[b][a] -= eta;
            g[a][a] += eta;
            g[b][b] += eta;
        }
        if (detail::incoming(d, c, wk[0] + 3) != detail::incoming(d, c, wk[0])) correction += eta;
    }
    IntMatrix gr = zero_matrix(w > 0 ? w - 1 : 0);
    for (int i = 1; i < w; ++i)
        for (int j = 1; j < w; ++j) gr[i - 1][j - 1] = g[i][j];
    return signature_symmetric(gr) - correction;
}

struct GaussEntry {
    int crossing = 0;
    bool over = false;
    int sign = 0;
};
using GaussCode = std::vector<std::vector<GaussEntry>>; // one list per component; crossingless loops are empty

inline GaussCode gauss_code(const PlanarDiagram& d) {
    GaussCode g;
    for (const auto& comp : diagram_components(d)) {
        std::vector<GaussEntry> seq;
        for (int e : comp) {
            auto [c, k] = d.head.at(e);
            seq.push_back({c, (k % 2) == d.over[c], crossing_sign(d, c)});
        }
        g.push_back(std::move(seq));
    }
    for (int i = 0; i < d.free_loops; ++i) g.emplace_back();
    return g;
}

inline std::string gauss_code_text(const GaussCode& g) {
    std::string s;
    for (const auto& comp : g) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) s += " ";
            s += (comp[i].over ? "O" : "U") + std::to_string(comp[i].crossing + 1) + (comp[i].sign > 0 ? "+" : "-");
        }
        s += "\n";
    }
    return s;
}

// Connected pieces of a diagram, each as its own diagram. Signature adds
// over a split union.
inline std::vector<PlanarDiagram> split_parts(const PlanarDiagram& d) {
    const int n = d.crossing_count();
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int v) {
        while (par[v] != v) v = par[v] = par[par[v]];
        return v;
    };
    std::map<int, int> first;
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            auto [it, fresh] = first.try_emplace(d.x[c][k], c);
            if (!fresh) par[find(c)] = find(it->second);
        }
    std::map<int, int> part_of_root;
    std::vector<PlanarDiagram> parts;
    std::vector<int> local(n);
    for (int c = 0; c < n; ++c) {
        auto [it, fresh] = part_of_root.try_emplace(find(c), static_cast<int>(parts.size()));
        if (fresh) parts.emplace_back();
        auto& q = parts[it->second];
        local[c] = q.crossing_count();
        q.x.push_back(d.x[c]);
        q.over.push_back(d.over[c]);
    }
    for (const auto& [e, hk] : d.head) {
        auto& q = parts[part_of_root.at(find(hk.first))];
        q.head[e] = {local[hk.first], hk.second};
    }
    return parts;
}

// mu, Alexander class, determinant and signature read off a diagram.
struct DiagramInvariants {
    int mu = 0;
    LaurentPoly delta;
    long long det = 0;
    int sigma = 0;
};

inline DiagramInvariants diagram_invariants(const PlanarDiagram& d) {
    DiagramInvariants r;
    r.mu = link_components(d);
    r.delta = alexander(d);
    r.det = std::llabs(r.delta.eval(-1));
    int s = 0;
    for (const auto& part : split_parts(d)) s += signature(part);
    r.sigma = s;
    return r;
}

} // namespace flatband
