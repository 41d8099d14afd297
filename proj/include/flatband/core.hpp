#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace flatband {

// Positions on the single disc are 0..2n-1 clockwise from the fixed point.
// Position k < n carries label k+1, position n+k carries label (k+1)'.

struct BandEnd {
    int band = 0;
    int end = 0; // 0 or 1
    friend bool operator==(const BandEnd&, const BandEnd&) = default;
};

// One passage of `other` across this band. Events are listed along the
// band from end 0 to end 1. `from_left` says the other band enters from
// this band's left side (looking along the traversal direction).
struct CrossingEvent {
    int other = 0;
    bool over = false;
    bool from_left = false;
    int id = 0;
    friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

enum class Provenance { plumbing_code, chord_code, manual, relabel, slide, dipole_move };

inline const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::plumbing_code: return "plumbing-code";
    case Provenance::chord_code: return "chord-code";
    case Provenance::manual: return "manual";
    case Provenance::relabel: return "relabel";
    case Provenance::slide: return "slide";
    case Provenance::dipole_move: return "dipole-move";
    }
    return "manual";
}

inline std::optional<Provenance> provenance_from_string(const std::string& s) {
    for (auto p : {Provenance::plumbing_code, Provenance::chord_code, Provenance::manual,
                   Provenance::relabel, Provenance::slide, Provenance::dipole_move})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

using EventLists = std::vector<std::vector<CrossingEvent>>;

struct SurfacePresentation {
    std::vector<BandEnd> order;           // attachment at each position
    EventLists events;                    // per band
    std::optional<std::vector<int>> layers; // band ids top to bottom, when events come from a layer order
    Provenance provenance = Provenance::manual;
    bool unchecked_realizability = false;

    int band_count() const { return static_cast<int>(events.size()); }
    int disc_count() const { return 1; }

    friend bool operator==(const SurfacePresentation&, const SurfacePresentation&) = default;
};

// A matching on positions, each pair stored (lo, hi), sorted.
using Pairing = std::vector<std::pair<int, int>>;

struct PlumbingCode {
    std::vector<int> connection; // 1-based one-line notation
    std::vector<int> layers;     // 1-based, top to bottom
};

inline std::string label_name(int pos, int n) {
    return pos < n ? std::to_string(pos + 1) : std::to_string(pos - n + 1) + "'";
}

// positions[b] = {position of end 0, position of end 1}
inline std::vector<std::array<int, 2>> end_positions(const SurfacePresentation& p) {
    std::vector<std::array<int, 2>> r(p.band_count(), {-1, -1});
    for (int i = 0; i < static_cast<int>(p.order.size()); ++i) r[p.order[i].band][p.order[i].end] = i;
    return r;
}

inline bool is_permutation_of_range(const std::vector<int>& v, int base) {
    std::vector<int> s(v);
    std::sort(s.begin(), s.end());
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] != i + base) return false;
    return true;
}

// Structural checks shared by every constructor.
inline void validate_events(const EventLists& ev) {
    const int n = static_cast<int>(ev.size());
    std::map<int, std::vector<std::pair<int, CrossingEvent>>> by_id;
    for (int b = 0; b < n; ++b)
        for (const auto& e : ev[b]) {
            if (e.other < 0 || e.other >= n)
                throw Error(ErrorKind::invalid_presentation, "event names unknown band " + std::to_string(e.other + 1));
            if (e.other == b)
                throw Error(ErrorKind::invalid_presentation, "band " + std::to_string(b + 1) + " crosses itself");
            by_id[e.id].push_back({b, e});
        }
    for (const auto& [id, occ] : by_id) {
        if (occ.size() != 2)
            throw Error(ErrorKind::invalid_presentation, "crossing #" + std::to_string(id) + " is not mirrored");
        const auto& [a, ea] = occ[0];
        const auto& [b, eb] = occ[1];
        if (ea.other != b || eb.other != a || ea.over == eb.over || ea.from_left == eb.from_left)
            throw Error(ErrorKind::invalid_presentation, "crossing #" + std::to_string(id) + " is not mirrored");
    }
}

inline void validate(const SurfacePresentation& p) {
    const int n = p.band_count();
    if (n < 1) throw Error(ErrorKind::invalid_presentation, "no bands");
    if (static_cast<int>(p.order.size()) != 2 * n)
        throw Error(ErrorKind::invalid_presentation, "attachment order must have 2n entries");
    std::vector<int> seen(2 * n, 0);
    for (const auto& be : p.order) {
        if (be.band < 0 || be.band >= n || (be.end != 0 && be.end != 1))
            throw Error(ErrorKind::invalid_presentation, "bad attachment");
        if (seen[2 * be.band + be.end]++)
            throw Error(ErrorKind::invalid_presentation, "attachment repeated");
    }
    validate_events(p.events);
    if (p.layers) {
        if (static_cast<int>(p.layers->size()) != n || !is_permutation_of_range(*p.layers, 0))
            throw Error(ErrorKind::invalid_presentation, "layers must be a permutation of the bands");
    }
}

// Renumber crossing ids by first appearance (band order, then list order).
inline EventLists canonical_ids(EventLists ev) {
    std::map<int, int> ren;
    for (auto& l : ev)
        for (auto& e : l) {
            auto [it, fresh] = ren.try_emplace(e.id, static_cast<int>(ren.size()));
            (void)fresh;
            e.id = it->second;
        }
    return ev;
}

inline bool chords_interleave(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Events for bands stacked by layer. Each band is drawn as a rectangle over
// its chord: two legs at the end positions joined by a top edge at a height
// ranked by span. Two bands cross once iff their chords interleave.
inline EventLists compile_layered(const std::vector<BandEnd>& order, const std::vector<int>& layers) {
    const int n = static_cast<int>(layers.size());
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[layers[r]] = r;
    std::vector<std::array<int, 2>> pos(n);
    for (int i = 0; i < 2 * n; ++i) pos[order[i].band][order[i].end] = i;
    std::vector<int> lo(n), hi(n), height(n);
    for (int b = 0; b < n; ++b) {
        lo[b] = std::min(pos[b][0], pos[b][1]);
        hi[b] = std::max(pos[b][0], pos[b][1]);
    }
    std::vector<int> by_height(n);
    std::iota(by_height.begin(), by_height.end(), 0);
    std::sort(by_height.begin(), by_height.end(), [&](int x, int y) {
        return std::pair(hi[x] - lo[x], lo[x]) < std::pair(hi[y] - lo[y], lo[y]);
    });
    for (int r = 0; r < n; ++r) height[by_height[r]] = r + 1;

    // distance along the rectangle from its lo leg
    auto param = [&](int b, int x, int y) {
        if (x == lo[b]) return y;
        if (x == hi[b]) return height[b] + (hi[b] - lo[b]) + (height[b] - y);
        return height[b] + (x - lo[b]);
    };

    std::vector<std::vector<std::pair<int, CrossingEvent>>> pts(n);
    int id = 0;
    for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
            if (b1 == b2 || !(lo[b1] < lo[b2] && lo[b2] < hi[b1] && hi[b1] < hi[b2])) continue;
            int x, y;
            if (height[b1] < height[b2]) { x = lo[b2]; y = height[b1]; }
            else { x = hi[b1]; y = height[b2]; }
            const bool over1 = rank[b1] < rank[b2];
            pts[b1].push_back({param(b1, x, y), {b2, over1, false, id}});
            pts[b2].push_back({param(b2, x, y), {b1, !over1, true, id}});
            ++id;
        }
    EventLists ev(n);
    for (int b = 0; b < n; ++b) {
        std::stable_sort(pts[b].begin(), pts[b].end(),
                         [](const auto& u, const auto& v) { return u.first < v.first; });
        for (auto& [_, e] : pts[b]) ev[b].push_back(e);
    }
    // lists were built lo -> hi; bands whose end 0 sits at hi run the other way
    std::vector<bool> flipped(n);
    for (int b = 0; b < n; ++b) flipped[b] = pos[b][0] == hi[b];
    for (int b = 0; b < n; ++b) {
        if (flipped[b]) std::reverse(ev[b].begin(), ev[b].end());
        for (auto& e : ev[b]) {
            if (flipped[b]) e.from_left = !e.from_left;
            if (flipped[e.other]) e.from_left = !e.from_left;
        }
    }
    return canonical_ids(std::move(ev));
}

inline SurfacePresentation make_layered(std::vector<BandEnd> order, std::vector<int> layers, Provenance prov) {
    SurfacePresentation p;
    p.order = std::move(order);
    p.events.resize(layers.size());
    p.layers = std::move(layers);
    p.provenance = prov;
    validate(p);
    p.events = compile_layered(p.order, *p.layers);
    return p;
}

// Band k (0-based) joins position k to position n + connection[k] - 1.
inline SurfacePresentation from_plumbing_code(const PlumbingCode& code) {
    const int n = static_cast<int>(code.connection.size());
    if (n == 0) throw Error(ErrorKind::invalid_presentation, "empty plumbing code");
    if (!is_permutation_of_range(code.connection, 1))
        throw Error(ErrorKind::invalid_presentation, "connection is not a permutation of 1..n");
    if (static_cast<int>(code.layers.size()) != n || !is_permutation_of_range(code.layers, 1))
        throw Error(ErrorKind::invalid_presentation, "layers is not a permutation of 1..n");
    std::vector<BandEnd> order(2 * n);
    for (int k = 0; k < n; ++k) {
        order[k] = {k, 0};
        order[n + code.connection[k] - 1] = {k, 1};
    }
    std::vector<int> layers(n);
    for (int r = 0; r < n; ++r) layers[r] = code.layers[r] - 1;
    return make_layered(std::move(order), std::move(layers), Provenance::plumbing_code);
}

// Recover the plumbing code if the presentation still has basket shape.
inline std::optional<PlumbingCode> as_plumbing_code(const SurfacePresentation& p) {
    if (!p.layers) return std::nullopt;
    const int n = p.band_count();
    PlumbingCode c;
    for (int k = 0; k < n; ++k) {
        if (p.order[k] != BandEnd{k, 0}) return std::nullopt;
    }
    c.connection.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        const auto& be = p.order[n + j];
        if (be.end != 1) return std::nullopt;
        c.connection[be.band] = j + 1;
    }
    for (int b : *p.layers) c.layers.push_back(b + 1);
    return c;
}

inline Pairing pairing_of(const SurfacePresentation& p) {
    Pairing r;
    for (const auto& e : end_positions(p)) r.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
    std::sort(r.begin(), r.end());
    return r;
}

inline std::string pairing_to_string(const Pairing& pr, int n) {
    std::string s = "{";
    for (std::size_t i = 0; i < pr.size(); ++i) {
        if (i) s += ",";
        s += "{" + label_name(pr[i].first, n) + "," + label_name(pr[i].second, n) + "}";
    }
    return s + "}";
}

// Move the fixed point: old position x becomes (x + offset) mod 2n.
// Layered presentations are recompiled from the new picture; otherwise the
// event lists ride along unchanged.
inline SurfacePresentation relabel(const SurfacePresentation& p, int offset) {
    const int m = static_cast<int>(p.order.size());
    const int r = ((offset % m) + m) % m;
    if (r == 0) return p;
    SurfacePresentation q = p;
    for (int i = 0; i < m; ++i) q.order[(i + r) % m] = p.order[i];
    if (q.layers) q.events = compile_layered(q.order, *q.layers);
    if (q.provenance == Provenance::plumbing_code) q.provenance = Provenance::relabel;
    return q;
}

// Bands whose two ends are both unbarred (omega) or both barred (omega_bar).
inline std::vector<int> omega_bands(const SurfacePresentation& p) {
    const int n = p.band_count();
    std::vector<int> r;
    auto pos = end_positions(p);
    for (int b = 0; b < n; ++b)
        if (std::max(pos[b][0], pos[b][1]) < n) r.push_back(b);
    return r;
}

inline std::vector<int> omega_bar_bands(const SurfacePresentation& p) {
    const int n = p.band_count();
    std::vector<int> r;
    auto pos = end_positions(p);
    for (int b = 0; b < n; ++b)
        if (std::min(pos[b][0], pos[b][1]) >= n) r.push_back(b);
    return r;
}

inline Pairing omega(const SurfacePresentation& p) {
    Pairing r;
    for (auto pr : pairing_of(p))
        if (pr.second < p.band_count()) r.push_back(pr);
    return r;
}

inline Pairing omega_bar(const SurfacePresentation& p) {
    Pairing r;
    for (auto pr : pairing_of(p))
        if (pr.first >= p.band_count()) r.push_back(pr);
    return r;
}

inline bool is_dipole_ready(const SurfacePresentation& p) { return omega_bands(p).empty(); }

inline int crossing_count(const EventLists& ev) {
    int c = 0;
    for (const auto& l : ev) c += static_cast<int>(l.size());
    return c / 2;
}

} // namespace flatband
