#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "dipole.hpp"
#include "invariants.hpp"
#include "topology.hpp"

namespace flatband {

// ---- fingerprints of every presentation form -------------------------------

inline Fingerprint fingerprint(const SurfacePresentation& p) {
    return fingerprint_of(boundary_components(p), seifert_matrix(p));
}

inline Fingerprint fingerprint(const DipolePresentation& d) {
    return fingerprint_of(boundary_components(d), seifert_matrix(d));
}

// Undo hub flips; the result carries the same banded surface up to isotopy.
inline DipolePresentation underlying_dipole(const K2nDiagram& k) {
    DipolePresentation d;
    d.d1 = k.rot1;
    d.d2 = k.rot2;
    if (k.flipped[0]) std::reverse(d.d1.begin(), d.d1.end());
    if (k.flipped[1]) std::reverse(d.d2.begin(), d.d2.end());
    d.events = k.events;
    d.connector = k.connector;
    d.provenance = Provenance::dipole_move;
    return d;
}

// mu is read off the (possibly twisted) ribbon graph itself.
inline Fingerprint fingerprint(const K2nDiagram& k) {
    return fingerprint_of(boundary_components(k), seifert_matrix(underlying_dipole(k)));
}

// ---- band slides -------------------------------------------------------------

enum class Side { before, after };

struct SlideSpec {
    int moving_band = 0;
    int moving_end = 0;
    int along_band = 0;
    Side target_side = Side::after; // where the end lands relative to the far end of along_band
    friend bool operator==(const SlideSpec&, const SlideSpec&) = default;
};

// Cancel adjacent pairs of passages that undo each other (a Reidemeister II
// bigon between the same two bands).
inline EventLists reduce_r2(EventLists ev) {
    auto index_of = [](const std::vector<CrossingEvent>& l, int id) {
        for (int i = 0; i < static_cast<int>(l.size()); ++i)
            if (l[i].id == id) return i;
        return -1;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& l : ev) {
            for (std::size_t k = 0; k + 1 < l.size() && !changed; ++k) {
                const auto e1 = l[k], e2 = l[k + 1];
                if (e1.other != e2.other || e1.over != e2.over || e1.from_left == e2.from_left) continue;
                auto& m = ev[e1.other];
                const int i1 = index_of(m, e1.id), i2 = index_of(m, e2.id);
                if (std::abs(i1 - i2) != 1) continue;
                m.erase(m.begin() + std::max(i1, i2));
                m.erase(m.begin() + std::min(i1, i2));
                l.erase(l.begin() + k, l.begin() + k + 2);
                changed = true;
            }
            if (changed) break;
        }
    }
    return ev;
}

// Drag one end of a band along a neighbouring band to just past that band's
// far end. The moving band picks up a parallel copy of the passages along
// the other band.
inline SurfacePresentation band_slide(const SurfacePresentation& p, const SlideSpec& s) {
    const int n = p.band_count();
    const int m = 2 * n;
    const int b = s.moving_band, e = s.moving_end, c = s.along_band;
    if (b < 0 || b >= n || c < 0 || c >= n || (e != 0 && e != 1))
        throw Error(ErrorKind::invalid_slide, "unknown band or end");
    if (b == c) throw Error(ErrorKind::invalid_slide, "a band cannot slide along itself");
    auto pos = end_positions(p);
    const int pe = pos[b][e];
    const bool next_is_c = p.order[(pe + 1) % m].band == c;
    const bool prev_is_c = p.order[(pe - 1 + m) % m].band == c;
    bool before; // moving end sits just before the near end of c
    if (s.target_side == Side::after && next_is_c) before = true;
    else if (s.target_side == Side::before && prev_is_c) before = false;
    else throw Error(ErrorKind::invalid_slide, "moving end is not next to the along band on the requested side");
    const int pf = before ? (pe + 1) % m : (pe - 1 + m) % m;
    const int f = p.order[pf].end, g = 1 - f;
    for (const auto& x : p.events[c])
        if (x.other == b) throw Error(ErrorKind::invalid_slide, "along band crosses the moving band");

    const bool f_is_end0 = f == 0;
    const bool same = (e == 1) == f_is_end0;
    const bool on_left = before == f_is_end0;

    EventLists ev = p.events;
    int nid = 0;
    for (const auto& l : ev)
        for (const auto& x : l) nid = std::max(nid, x.id + 1);
    std::vector<CrossingEvent> copy;
    for (const auto& x : p.events[c]) {
        auto& l = ev[x.other];
        int k = 0;
        while (l[k].id != x.id) ++k;
        const CrossingEvent theirs = l[k];
        CrossingEvent ne{b, theirs.over, same ? theirs.from_left : !theirs.from_left, nid};
        l.insert(l.begin() + (on_left == x.from_left ? k : k + 1), ne);
        copy.push_back({x.other, x.over, same ? x.from_left : !x.from_left, nid});
        ++nid;
    }
    if (!same) std::reverse(copy.begin(), copy.end());
    auto& mine = ev[b];
    if (e == 1) mine.insert(mine.end(), copy.begin(), copy.end());
    else mine.insert(mine.begin(), copy.begin(), copy.end());

    SurfacePresentation q;
    q.order = p.order;
    const BandEnd item = q.order[pe];
    q.order.erase(q.order.begin() + pe);
    int pg = 0;
    while (q.order[pg] != BandEnd{c, g}) ++pg;
    q.order.insert(q.order.begin() + (before ? pg + 1 : pg), item);
    q.events = canonical_ids(reduce_r2(std::move(ev)));
    q.provenance = Provenance::slide;
    q.unchecked_realizability = p.unchecked_realizability;
    return q;
}

// ---- move log ------------------------------------------------------------------

enum class MoveKind { relabel, slide };

struct MoveRecord {
    MoveKind kind = MoveKind::relabel;
    int offset = 0;     // relabel
    SlideSpec slide;    // slide
    std::string rule;   // which normalization case fired, informational
    Fingerprint before;
    Fingerprint after;
};

struct MoveLog {
    std::vector<MoveRecord> moves;
    std::size_t size() const { return moves.size(); }
    bool empty() const { return moves.empty(); }
};

inline SurfacePresentation apply(const SurfacePresentation& p, const MoveRecord& r) {
    return r.kind == MoveKind::relabel ? relabel(p, r.offset) : band_slide(p, r.slide);
}

inline SurfacePresentation replay(const SurfacePresentation& initial, const MoveLog& log) {
    SurfacePresentation p = initial;
    for (const auto& r : log.moves) p = apply(p, r);
    return p;
}

// ---- greedy normalization ---------------------------------------------------

namespace detail {

inline int omega_after_rotation(const std::vector<std::array<int, 2>>& pos, int n, int r) {
    const int m = 2 * n;
    int c = 0;
    for (const auto& e : pos)
        if ((e[0] + r) % m < n && (e[1] + r) % m < n) ++c;
    return c;
}

} // namespace detail

inline int normalize_cap(int n) { return 8 * n * n; }

// Appends moves to `log` as it goes so a caller can still report the
// partial log when the cap is hit.
inline SurfacePresentation normalize_into(SurfacePresentation p, MoveLog& log) {
    const int n = p.band_count();
    const int m = 2 * n;
    const std::size_t cap = static_cast<std::size_t>(normalize_cap(n));
    const std::size_t start = log.size();
    Fingerprint fp = fingerprint(p);
    auto record = [&](MoveRecord r, SurfacePresentation next) {
        r.before = fp;
        fp = fingerprint(next);
        r.after = fp;
        log.moves.push_back(std::move(r));
        p = std::move(next);
    };
    for (;;) {
        auto om = omega_bands(p);
        if (om.empty()) return p;
        if (log.size() - start >= cap)
            throw Error(ErrorKind::iteration_cap_exceeded,
                        "no dipole-ready form after " + std::to_string(cap) + " moves");
        auto pos = end_positions(p);

        int b = om[0];
        for (int x : om)
            if (std::max(pos[x][0], pos[x][1]) > std::max(pos[b][0], pos[b][1])) b = x;
        const int j = std::max(pos[b][0], pos[b][1]);
        MoveRecord r;
        r.kind = MoveKind::slide;
        if (j != n - 1) {
            r.slide = {b, pos[b][0] == j ? 0 : 1, p.order[j + 1].band, Side::after};
            r.rule = "case-1";
        } else {
            const BandEnd at_n = p.order[n];
            if (pos[at_n.band][1 - at_n.end] >= n) {
                r.slide = {b, pos[b][0] == j ? 0 : 1, at_n.band, Side::after};
                r.rule = "case-2i";
            } else {
                auto ob = omega_bar_bands(p);
                int bb = ob.at(0);
                for (int x : ob)
                    if (std::max(pos[x][0], pos[x][1]) > std::max(pos[bb][0], pos[bb][1])) bb = x;
                const int mm = std::max(pos[bb][0], pos[bb][1]);
                r.slide = {bb, pos[bb][0] == mm ? 0 : 1, p.order[(mm + 1) % m].band, Side::after};
                r.rule = "case-2ii";
            }
        }
        std::optional<SurfacePresentation> slid;
        std::string why;
        try {
            slid = band_slide(p, r.slide);
        } catch (const Error& err) {
            why = err.what();
        }
        if (slid && omega_bands(*slid).size() < om.size()) {
            record(r, std::move(*slid));
            continue;
        }

        // otherwise move the fixed point if that helps
        int best = static_cast<int>(om.size()), best_r = 0;
        for (int q = 1; q < m; ++q) {
            int v = detail::omega_after_rotation(pos, n, q);
            if (v < best) { best = v; best_r = q; }
        }
        if (best_r != 0) {
            MoveRecord rl;
            rl.kind = MoveKind::relabel;
            rl.offset = best_r;
            rl.rule = "relabel";
            record(rl, relabel(p, best_r));
            continue;
        }
        if (!slid) throw Error(ErrorKind::iteration_cap_exceeded, "greedy slide not applicable: " + why);
        record(r, std::move(*slid));
    }
}

inline std::pair<SurfacePresentation, MoveLog> normalize(const SurfacePresentation& p) {
    MoveLog log;
    SurfacePresentation q = normalize_into(p, log);
    return {std::move(q), std::move(log)};
}

// ---- disc splitting and subdivision ------------------------------------------

// Cut the disc along a chord from the gap n|n+1 to the gap 2n|1 and join the
// halves by one new flat band, attached last on both discs.
inline DipolePresentation to_dipole(const SurfacePresentation& p) {
    if (!is_dipole_ready(p)) throw Error(ErrorKind::precondition, "presentation is not dipole-ready");
    const int n = p.band_count();
    auto pos = end_positions(p);
    DipolePresentation d;
    d.connector = n;
    d.events = p.events;
    d.events.emplace_back();
    std::vector<bool> flip(n + 1, false);
    for (int b = 0; b < n; ++b) flip[b] = pos[b][0] >= n;
    for (int b = 0; b < n; ++b) {
        if (flip[b]) std::reverse(d.events[b].begin(), d.events[b].end());
        for (auto& e : d.events[b]) {
            if (flip[b]) e.from_left = !e.from_left;
            if (flip[e.other]) e.from_left = !e.from_left;
        }
    }
    for (int i = 0; i < n; ++i) d.d1.push_back(p.order[i].band);
    for (int i = n; i < 2 * n; ++i) d.d2.push_back(p.order[i].band);
    d.d1.push_back(n);
    d.d2.push_back(n);
    d.provenance = Provenance::dipole_move;
    validate(d);
    return d;
}

inline K2nDiagram to_k2n(const DipolePresentation& d) {
    validate(d);
    K2nDiagram k;
    k.rot1 = d.d1;
    k.rot2 = d.d2;
    k.events = d.events;
    k.connector = d.connector;
    for (int b = 0; b < d.band_count(); ++b) {
        k.edges.push_back({0, b, 0});
        k.edges.push_back({1, b, 0});
        k.split.push_back(static_cast<int>((d.events[b].size() + 1) / 2));
    }
    return k;
}

// Turn one hub over: its rotation reverses and each incident edge band picks
// up a half twist (+1). Flipping the same hub again undoes it.
inline K2nDiagram flip_disc(const K2nDiagram& k, int hub) {
    if (hub != 0 && hub != 1) throw Error(ErrorKind::precondition, "hub must be D1 or D2");
    const int want = k.flipped[hub] ? 1 : 0;
    for (const auto& e : k.edges)
        if (e.hub == hub && e.voltage != want)
            throw Error(ErrorKind::precondition, "voltages at the hub are not uniform");
    K2nDiagram r = k;
    auto& rot = hub == 0 ? r.rot1 : r.rot2;
    std::reverse(rot.begin(), rot.end());
    for (auto& e : r.edges)
        if (e.hub == hub) e.voltage = 1 - want;
    r.flipped[hub] = !r.flipped[hub];
    return r;
}

inline bool all_voltages(const K2nDiagram& k, bool nonzero) {
    for (const auto& e : k.edges)
        if ((e.voltage != 0) != nonzero) return false;
    return true;
}

} // namespace flatband
