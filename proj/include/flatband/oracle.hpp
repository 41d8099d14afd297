#pragma once

#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "codes.hpp"
#include "core.hpp"
#include "moves.hpp"

namespace flatband {

// ---- linking numbers from coordinates ---------------------------------------

namespace detail {

struct Pt3 {
    double x, y, z;
};

// Core of band b in space: over the line y = 0 on a half circle at the
// band's layer height, back under it on a half circle in the disc (z = 0).
inline std::vector<Pt3> core_polyline(double lo, double hi, double zband, int segs, double phase) {
    std::vector<Pt3> pts;
    const double c = (lo + hi) / 2, r = (hi - lo) / 2;
    const double pi = std::acos(-1.0);
    auto ang = [&](int k) {
        if (k == 0) return 0.0;
        if (k == segs) return pi;
        return pi * (k + phase) / segs;
    };
    for (int k = 0; k <= segs; ++k) pts.push_back({c - r * std::cos(ang(k)), r * std::sin(ang(k)), zband});
    for (int k = 0; k <= segs; ++k) pts.push_back({c + r * std::cos(ang(k)), -r * std::sin(ang(k)), 0.0});
    return pts;
}

} // namespace detail

// lk(core i, push-off of core j), counted on the projection to the plane of
// the disc: every crossing where the push-off of j lies above core i adds
// its right-handed sign. Only layered presentations have coordinates.
inline int geometric_linking(const SurfacePresentation& p, int i, int j) {
    const int n = p.band_count();
    if (i == j) throw Error(ErrorKind::precondition, "linking of a core with its own push-off is the framing");
    if (i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorKind::precondition, "no such band");
    if (!p.layers) throw Error(ErrorKind::unsupported, "coordinates exist only for layered presentations");
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[(*p.layers)[r]] = r;
    auto pos = end_positions(p);
    const double eps = 0.25;

    for (int attempt = 0; attempt < 2; ++attempt) {
        const int segs = attempt == 0 ? 180 : 211;
        const double phase = attempt == 0 ? 0.0 : 0.37;
        auto mk = [&](int b, double lift) {
            const double lo = std::min(pos[b][0], pos[b][1]), hi = std::max(pos[b][0], pos[b][1]);
            auto pts = detail::core_polyline(lo, hi, static_cast<double>(n - rank[b]), segs, phase);
            for (auto& q : pts) q.z += lift;
            return pts;
        };
        const auto a = mk(i, 0.0);
        const auto b = mk(j, eps);
        bool degenerate = false;
        int lk = 0;
        for (std::size_t s = 0; s + 1 < a.size() && !degenerate; ++s)
            for (std::size_t u = 0; u + 1 < b.size(); ++u) {
                const auto &p0 = a[s], &p1 = a[s + 1], &q0 = b[u], &q1 = b[u + 1];
                const double dx = p1.x - p0.x, dy = p1.y - p0.y;
                const double ex = q1.x - q0.x, ey = q1.y - q0.y;
                const double den = dx * ey - dy * ex;
                if (std::abs(den) < 1e-12) continue; // parallel pieces; the two cores never overlap
                const double wx = q0.x - p0.x, wy = q0.y - p0.y;
                const double t = (wx * ey - wy * ex) / den;
                const double v = (wx * dy - wy * dx) / den;
                if (t < -1e-9 || t > 1 + 1e-9 || v < -1e-9 || v > 1 + 1e-9) continue;
                if (t < 1e-9 || t > 1 - 1e-9 || v < 1e-9 || v > 1 - 1e-9) {
                    degenerate = true;
                    break;
                }
                const double za = p0.z + t * (p1.z - p0.z);
                const double zb = q0.z + v * (q1.z - q0.z);
                if (zb <= za) continue;
                // over strand is j's push-off
                lk += (ex * dy - ey * dx) > 0 ? 1 : -1;
            }
        if (!degenerate) return lk;
    }
    throw Error(ErrorKind::degenerate_geometry, "perturbation failed twice");
}

inline IntMatrix geometric_seifert_matrix(const SurfacePresentation& p) {
    const int n = p.band_count();
    IntMatrix v = zero_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) v[i][j] = geometric_linking(p, i, j);
    return v;
}

// ---- exhaustive search for a dipole-ready form --------------------------------

namespace detail {

// Orbit representative under moving the fixed point.
inline std::string orbit_key(const SurfacePresentation& p) {
    std::string best;
    for (int r = 0; r < 2 * p.band_count(); ++r) {
        SurfacePresentation q = relabel(p, r);
        q.provenance = Provenance::manual;
        q.layers.reset();
        std::string k = serialize(q);
        if (r == 0 || k < best) best = k;
    }
    return best;
}

inline std::vector<SlideSpec> candidate_slides(const SurfacePresentation& p) {
    const int n = p.band_count(), m = 2 * n;
    auto pos = end_positions(p);
    std::vector<SlideSpec> out;
    for (int b = 0; b < n; ++b)
        for (int e = 0; e < 2; ++e) {
            const int pe = pos[b][e];
            const int next = p.order[(pe + 1) % m].band, prev = p.order[(pe - 1 + m) % m].band;
            if (next != b) out.push_back({b, e, next, Side::after});
            if (prev != b) out.push_back({b, e, prev, Side::before});
        }
    return out;
}

inline std::optional<int> readying_offset(const SurfacePresentation& p) {
    auto pos = end_positions(p);
    for (int r = 1; r < 2 * p.band_count(); ++r)
        if (omega_after_rotation(pos, p.band_count(), r) == 0) return r;
    return std::nullopt;
}

} // namespace detail

// Breadth-first over slides, with relabels folded into each state. Returns
// the first shortest log found, or nothing within max_depth moves.
inline std::optional<std::pair<SurfacePresentation, MoveLog>> bruteforce_normalize(const SurfacePresentation& start,
                                                                                   int max_depth) {
    const Fingerprint target = fingerprint(start);
    struct Node {
        SurfacePresentation p;
        std::vector<MoveRecord> path;
    };
    auto finish = [&](const Node& node, std::optional<int> offset)
        -> std::optional<std::pair<SurfacePresentation, MoveLog>> {
        MoveLog log;
        log.moves = node.path;
        SurfacePresentation q = node.p;
        if (offset) {
            MoveRecord r;
            r.kind = MoveKind::relabel;
            r.offset = *offset;
            r.rule = "search";
            q = relabel(q, *offset);
            log.moves.push_back(r);
        }
        Fingerprint fp = target;
        SurfacePresentation cur = start;
        for (auto& r : log.moves) {
            r.before = fp;
            cur = apply(cur, r);
            fp = fingerprint(cur);
            r.after = fp;
            if (!(fp == target)) return std::nullopt;
        }
        return std::pair{q, log};
    };

    std::vector<Node> level{{start, {}}};
    std::set<std::string> seen{detail::orbit_key(start)};
    for (int depth = 0; depth <= max_depth && !level.empty(); ++depth) {
        for (const auto& node : level)
            if (is_dipole_ready(node.p))
                if (auto r = finish(node, std::nullopt)) return r;
        if (depth == max_depth) break;
        for (const auto& node : level)
            if (auto off = detail::readying_offset(node.p))
                if (auto r = finish(node, off)) return r;
        std::vector<Node> next;
        for (const auto& node : level)
            for (const auto& s : detail::candidate_slides(node.p)) {
                SurfacePresentation q;
                try {
                    q = band_slide(node.p, s);
                } catch (const Error&) {
                    continue;
                }
                if (!seen.insert(detail::orbit_key(q)).second) continue;
                Node nn{std::move(q), node.path};
                MoveRecord r;
                r.kind = MoveKind::slide;
                r.slide = s;
                r.rule = "search";
                nn.path.push_back(r);
                next.push_back(std::move(nn));
            }
        level = std::move(next);
    }
    return std::nullopt;
}

} // namespace flatband
