#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "core.hpp"
#include "dipole.hpp"

namespace flatband {

struct RenderConfig {
    double width = 480;
    double height = 480;
    double radius = 170;      // chord diagram circle
    double hub_radius = 60;   // two-hub pictures
    double point_radius = 4;
    double font_size = 13;
    double stroke_width = 2;
};

// key = value lines, '#' starts a comment
inline RenderConfig parse_render_config(std::istream& in) {
    RenderConfig c;
    std::map<std::string, double*> keys{{"width", &c.width},           {"height", &c.height},
                                        {"radius", &c.radius},         {"hub_radius", &c.hub_radius},
                                        {"point_radius", &c.point_radius}, {"font_size", &c.font_size},
                                        {"stroke_width", &c.stroke_width}};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            const char* ws = " \t\r";
            s.erase(0, s.find_first_not_of(ws));
            s.erase(s.find_last_not_of(ws) + 1);
            return s;
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw Error(ErrorKind::parse, "config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        auto it = keys.find(key);
        if (it == keys.end()) throw Error(ErrorKind::parse, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        try {
            std::size_t used = 0;
            *it->second = std::stod(val, &used);
            if (used != val.size() || !(*it->second > 0)) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "config line " + std::to_string(lineno) + ": bad value for '" + key + "'");
        }
    }
    return c;
}

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

inline const char* band_colour(int b) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
    return palette[b % 10];
}

inline std::string svg_open(const RenderConfig& c) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(c.width) + "\" height=\"" +
           num(c.height) + "\" viewBox=\"0 0 " + num(c.width) + " " + num(c.height) + "\">\n"
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string text(double x, double y, const std::string& s, const RenderConfig& c, const char* anchor = "middle") {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
           num(c.font_size) + "\" text-anchor=\"" + anchor + "\" dominant-baseline=\"middle\">" + s + "</text>\n";
}

} // namespace detail

// Disc as a circle, attachment points clockwise from the fixed point at
// the top, one straight chord per band.
inline std::string render_svg(const SurfacePresentation& p, const RenderConfig& c = {}) {
    using detail::num;
    const int n = p.band_count(), m = 2 * n;
    const double cx = c.width / 2, cy = c.height / 2 + c.font_size / 2, pi = std::acos(-1.0);
    auto at = [&](int k, double r) {
        const double th = pi / 2 - 2 * pi * (k + 0.5) / m;
        return std::pair(cx + r * std::cos(th), cy - r * std::sin(th));
    };
    std::string s = detail::svg_open(c);
    s += detail::text(cx, c.font_size, "flat banded surface, " + std::to_string(n) + (n == 1 ? " band" : " bands"), c);
    s += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(c.radius) +
         "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"" + num(c.stroke_width) + "\"/>\n";
    s += "<line x1=\"" + num(cx) + "\" y1=\"" + num(cy - c.radius - 8) + "\" x2=\"" + num(cx) + "\" y2=\"" +
         num(cy - c.radius + 8) + "\" stroke=\"black\" stroke-width=\"" + num(c.stroke_width) + "\"/>\n";
    auto pos = end_positions(p);
    for (int b = 0; b < n; ++b) {
        auto [x0, y0] = at(pos[b][0], c.radius);
        auto [x1, y1] = at(pos[b][1], c.radius);
        s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
             "\" stroke=\"" + detail::band_colour(b) + "\" stroke-width=\"" + num(c.stroke_width) + "\"/>\n";
    }
    for (int k = 0; k < m; ++k) {
        auto [x, y] = at(k, c.radius);
        auto [tx, ty] = at(k, c.radius + 2 * c.font_size);
        s += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(c.point_radius) + "\" fill=\"" +
             detail::band_colour(p.order[k].band) + "\"/>\n";
        s += detail::text(tx, ty, label_name(k, n), c);
    }
    return s + "</svg>\n";
}

namespace detail {

// Hubs left and right; `middles` draws a subdivision vertex on each band.
inline std::string render_two_hubs(const std::vector<int>& rot1, const std::vector<int>& rot2,
                                   const std::vector<std::array<int, 2>>* voltages, const std::string& title,
                                   const RenderConfig& c) {
    const int k = static_cast<int>(rot1.size());
    const double pi = std::acos(-1.0);
    const double h1x = c.width * 0.2, h2x = c.width * 0.8, hy = c.height / 2 + c.font_size / 2;
    std::vector<std::pair<double, double>> a1(k), a2(k);
    // D1 attachments on its right side, top to bottom clockwise; D2 mirrored
    for (int i = 0; i < k; ++i) {
        const double th = pi / 2 - pi * (i + 0.5) / k;
        a1[rot1[i]] = {h1x + c.hub_radius * std::cos(th), hy - c.hub_radius * std::sin(th)};
        const double th2 = pi / 2 + pi * (i + 0.5) / k;
        a2[rot2[i]] = {h2x + c.hub_radius * std::cos(th2), hy + c.hub_radius * std::sin(th2)};
    }
    std::string s = svg_open(c);
    s += text(c.width / 2, c.font_size, title, c);
    const double top = hy - c.height * 0.35, step = k > 1 ? c.height * 0.7 / (k - 1) : 0;
    for (int b = 0; b < k; ++b) {
        const double mx = c.width / 2, my = k > 1 ? top + step * b : hy;
        const char* col = band_colour(b);
        if (voltages) {
            for (int side = 0; side < 2; ++side) {
                auto [x, y] = side == 0 ? a1[b] : a2[b];
                const int v = (*voltages)[b][side];
                s += "<line x1=\"" + num(x) + "\" y1=\"" + num(y) + "\" x2=\"" + num(mx) + "\" y2=\"" + num(my) +
                     "\" stroke=\"" + col + "\" stroke-width=\"" + num(c.stroke_width) + "\"" +
                     (v != 0 ? " stroke-dasharray=\"6 3\"" : "") + "/>\n";
                if (v != 0)
                    s += text((x + mx) / 2, (y + my) / 2 - c.font_size * 0.6, v > 0 ? "+1" : "-1", c);
            }
            s += "<circle cx=\"" + num(mx) + "\" cy=\"" + num(my) + "\" r=\"" + num(c.point_radius * 1.5) +
                 "\" fill=\"" + col + "\"/>\n";
            s += text(mx, my - c.font_size, "m" + std::to_string(b + 1), c);
        } else {
            s += "<path d=\"M " + num(a1[b].first) + " " + num(a1[b].second) + " Q " + num(mx) + " " + num(my) + " " +
                 num(a2[b].first) + " " + num(a2[b].second) + "\" fill=\"none\" stroke=\"" + col +
                 "\" stroke-width=\"" + num(c.stroke_width) + "\"/>\n";
        }
    }
    for (auto [x, label] : {std::pair{h1x, "D1"}, std::pair{h2x, "D2"}}) {
        s += "<circle cx=\"" + num(x) + "\" cy=\"" + num(hy) + "\" r=\"" + num(c.hub_radius) +
             "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"" + num(c.stroke_width) + "\"/>\n";
        s += text(x, hy, label, c);
    }
    return s + "</svg>\n";
}

} // namespace detail

inline std::string render_svg(const DipolePresentation& d, const RenderConfig& c = {}) {
    return detail::render_two_hubs(d.d1, d.d2, nullptr,
                                   "flat dipole surface, " + std::to_string(d.band_count()) + " bands", c);
}

inline std::string render_svg(const K2nDiagram& k, const RenderConfig& c = {}) {
    std::vector<std::array<int, 2>> v(k.middle_count());
    for (const auto& e : k.edges) v[e.middle][e.hub] = e.voltage;
    return detail::render_two_hubs(k.rot1, k.rot2, &v,
                                   "K(2," + std::to_string(k.middle_count()) + ") graph diagram, " +
                                       std::to_string(k.edges.size()) + " edges",
                                   c);
}

} // namespace flatband
