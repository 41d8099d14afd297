#pragma once

#include <algorithm>
#include <vector>

#include "core.hpp"
#include "dipole.hpp"
#include "matrix.hpp"
#include "ribbon.hpp"

namespace flatband {

// ---- boundary components ---------------------------------------------------

inline int boundary_components(const SurfacePresentation& p) {
    const int m = static_cast<int>(p.order.size());
    auto pos = end_positions(p);
    std::vector<int> partner(m);
    for (const auto& e : pos) {
        partner[e[0]] = e[1];
        partner[e[1]] = e[0];
    }
    std::vector<bool> seen(m, false);
    int c = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++c;
        for (int x = s; !seen[x]; x = partner[(x - 1 + m) % m]) seen[x] = true;
    }
    return c;
}

// Half-edge 2b is band b's end on D1 (or its end 0), 2b+1 the other end.
inline RibbonGraph ribbon_graph(const SurfacePresentation& p) {
    RibbonGraph g;
    g.half_edge_count = 2 * p.band_count();
    g.rotation.emplace_back();
    for (const auto& be : p.order) g.rotation[0].push_back(2 * be.band + be.end);
    for (int b = 0; b < p.band_count(); ++b) g.edges.push_back({2 * b, 2 * b + 1, false});
    return g;
}

inline RibbonGraph ribbon_graph(const DipolePresentation& d) {
    RibbonGraph g;
    g.half_edge_count = 2 * d.band_count();
    g.rotation.resize(2);
    for (int b : d.d1) g.rotation[0].push_back(2 * b);
    for (int b : d.d2) g.rotation[1].push_back(2 * b + 1);
    for (int b = 0; b < d.band_count(); ++b) g.edges.push_back({2 * b, 2 * b + 1, false});
    return g;
}

// Half-edges: 4b at D1, 4b+1 and 4b+2 at m_b, 4b+3 at D2.
inline RibbonGraph ribbon_graph(const K2nDiagram& k) {
    RibbonGraph g;
    const int n = k.middle_count();
    g.half_edge_count = 4 * n;
    g.rotation.resize(2 + n);
    for (int b : k.rot1) g.rotation[0].push_back(4 * b);
    for (int b : k.rot2) g.rotation[1].push_back(4 * b + 3);
    for (int b = 0; b < n; ++b) g.rotation[2 + b] = {4 * b + 1, 4 * b + 2};
    for (int b = 0; b < n; ++b) {
        g.edges.push_back({4 * b, 4 * b + 1, (k.edges[2 * b].voltage & 1) != 0});
        g.edges.push_back({4 * b + 2, 4 * b + 3, (k.edges[2 * b + 1].voltage & 1) != 0});
    }
    return g;
}

inline int boundary_components(const DipolePresentation& d) { return boundary_count(ribbon_graph(d)); }
inline int boundary_components(const K2nDiagram& k) { return boundary_count(ribbon_graph(k)); }

struct EulerData {
    int chi = 0;
    int beta1 = 0;
    int genus = 0;
};

inline EulerData euler_data(int discs, int bands, int mu) {
    EulerData e;
    e.chi = discs - bands;
    e.beta1 = 1 - e.chi;
    const int twice = 2 - mu - e.chi;
    if (twice % 2 != 0 || twice < 0)
        throw Error(ErrorKind::non_integral_genus, "mu = " + std::to_string(mu) + ", chi = " + std::to_string(e.chi));
    e.genus = twice / 2;
    return e;
}

inline EulerData euler_data(const SurfacePresentation& p) {
    return euler_data(1, p.band_count(), boundary_components(p));
}
inline EulerData euler_data(const DipolePresentation& d) {
    return euler_data(2, d.band_count(), boundary_components(d));
}
// middle vertices add one disc and one band each
inline EulerData euler_data(const K2nDiagram& k) {
    return euler_data(2 + k.middle_count(), 2 * k.middle_count(), boundary_components(k));
}

// ---- cores and Seifert matrix ----------------------------------------------

struct CoreCrossing {
    int i = 0, j = 0;      // row/column indices in V
    int sign = 0;          // right-handed sign; for inside crossings taken with j on top
    bool j_over_i = false;
    bool inside = false;   // chord-chord crossing within a disc
    int disc = 0;
};

struct CoreDiagram {
    int size = 0;
    std::vector<CoreCrossing> crossings;
    bool unchecked_realizability = false;
};

// Chord x from x0 to x1, chord y from y0 to y1 along a disc boundary read
// clockwise; sign of their crossing with y on top, 0 if they miss.
inline int interior_sign(int x0, int x1, int y0, int y1) {
    if (!chords_interleave(x0, x1, y0, y1)) return 0;
    const int t = std::min(x0, x1) < std::min(y0, y1) ? 1 : -1;
    const int hx = x0 > x1 ? 1 : -1;
    const int hy = y0 > y1 ? 1 : -1;
    return t * hx * hy;
}

namespace detail {

// Exterior crossings seen from the lower band of each pair. dir[b] is +1
// when the core runs along band b from end 0 to end 1.
inline void exterior_crossings(const EventLists& ev, const std::vector<int>& index, const std::vector<int>& dir,
                               CoreDiagram& cd) {
    for (int a = 0; a < static_cast<int>(ev.size()); ++a)
        for (const auto& e : ev[a]) {
            if (e.other < a) continue;
            CoreCrossing c;
            c.i = index[a];
            c.j = index[e.other];
            c.j_over_i = !e.over;
            const int s = (e.over == e.from_left) ? -1 : 1;
            c.sign = s * dir[a] * dir[e.other];
            cd.crossings.push_back(c);
        }
}

} // namespace detail

// Cores run along the band from the lower position to the higher one and
// return through the disc on a straight chord.
inline CoreDiagram core_diagram(const SurfacePresentation& p) {
    const int n = p.band_count();
    CoreDiagram cd;
    cd.size = n;
    cd.unchecked_realizability = p.unchecked_realizability;
    auto pos = end_positions(p);
    std::vector<int> index(n), dir(n);
    for (int b = 0; b < n; ++b) {
        index[b] = b;
        dir[b] = pos[b][0] < pos[b][1] ? 1 : -1;
    }
    detail::exterior_crossings(p.events, index, dir, cd);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int lo_i = std::min(pos[i][0], pos[i][1]), hi_i = std::max(pos[i][0], pos[i][1]);
            const int lo_j = std::min(pos[j][0], pos[j][1]), hi_j = std::max(pos[j][0], pos[j][1]);
            const int s = interior_sign(hi_i, lo_i, hi_j, lo_j);
            if (s != 0) cd.crossings.push_back({i, j, s, true, true, 0});
        }
    return cd;
}

// Core of band b: along b from D1 to D2, through D2 to the connector, back
// across the connector on its own parallel strand, then through D1 home.
inline CoreDiagram core_diagram(const DipolePresentation& d) {
    const int k = d.band_count();
    CoreDiagram cd;
    cd.size = k - 1;
    std::vector<int> index(k, -1), dir(k, 1), strands;
    for (int b = 0, r = 0; b < k; ++b)
        if (b != d.connector) {
            index[b] = r++;
            strands.push_back(b);
        }
    detail::exterior_crossings(d.events, index, dir, cd);
    std::vector<int> at1(k), slot1(k), at2(k), slot2(k);
    const int s = static_cast<int>(strands.size());
    for (int i = 0, cur = 0; i < k; ++i) {
        if (d.d1[i] == d.connector)
            for (int q = 0; q < s; ++q) slot1[strands[q]] = cur++;
        else at1[d.d1[i]] = cur++;
    }
    for (int i = 0, cur = 0; i < k; ++i) {
        if (d.d2[i] == d.connector)
            for (int q = s - 1; q >= 0; --q) slot2[strands[q]] = cur++;
        else at2[d.d2[i]] = cur++;
    }
    for (int x = 0; x < s; ++x)
        for (int y = x + 1; y < s; ++y) {
            const int bx = strands[x], by = strands[y];
            if (int v = interior_sign(at2[bx], slot2[bx], at2[by], slot2[by]))
                cd.crossings.push_back({x, y, v, true, true, 1});
            if (int v = interior_sign(slot1[bx], at1[bx], slot1[by], at1[by]))
                cd.crossings.push_back({x, y, v, true, true, 0});
        }
    return cd;
}

inline IntMatrix seifert_matrix(const CoreDiagram& cd) {
    IntMatrix v = zero_matrix(cd.size);
    for (const auto& c : cd.crossings) {
        if (c.inside) {
            v[c.i][c.j] += c.sign;
            v[c.j][c.i] -= c.sign;
        } else if (c.j_over_i) {
            v[c.i][c.j] += c.sign;
        } else {
            v[c.j][c.i] += c.sign;
        }
    }
    return v;
}

inline IntMatrix seifert_matrix(const SurfacePresentation& p) { return seifert_matrix(core_diagram(p)); }
inline IntMatrix seifert_matrix(const DipolePresentation& d) { return seifert_matrix(core_diagram(d)); }

} // namespace flatband
