#pragma once

// Board rendering: row-shifted ASCII diagrams and SVG documents with
// optional wasted-triangle shading and the extended (edge-column) view.
// Output is deterministic for identical inputs.

#include <cmath>
#include <cstdio>
#include <string>

#include "hexpath/connection.hpp"
#include "hexpath/unitgrid.hpp"

namespace hexpath {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
    RenderFormat format = RenderFormat::Ascii;
    bool show_waste = false;
    bool show_extension = false;
};

// One text row per board row, shifted one column per row to suggest the
// rhombus. Stones render as a filled disk, empty cells as a middle dot.
inline std::string render_ascii(const StoneSet& s, const RenderSpec& spec = {}) {
    const int n = s.n();
    const int x0 = spec.show_extension ? 0 : 1;
    const int x1 = spec.show_extension ? n + 1 : n;
    std::string out;
    for (int y = 1; y <= n; ++y) {
        out.append(y - 1, ' ');
        for (int x = x0; x <= x1; ++x) {
            if (x > x0) out += ' ';
            out += s.contains({x, y}) ? "\xe2\x97\x8f" : "\xc2\xb7";  // U+25CF / U+00B7
        }
        out += '\n';
    }
    if (spec.show_waste) {
        auto w = wasted(s, Region::whole_grid(n));
        out += "# wasted triangles: t=" + std::to_string(w.t) +
               " up=" + std::to_string(w.t_up) + " down=" + std::to_string(w.t_down) + "\n";
    }
    return out;
}

namespace detail {

// Axial layout: unit cell spacing along a row, half-cell shift per row.
// The unit-grid triangles connecting cell centers come out equilateral.
inline void cell_center(int x, int y, double scale, double& cx, double& cy) {
    cx = scale * (x + 0.5 * y);
    cy = scale * (0.8660254037844386 * y);
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

// SVG 1.1 document: one hexagon polygon per cell, one disk per stone,
// optional wasted-triangle shading on the unit grid.
inline std::string render_svg(const StoneSet& s, const RenderSpec& spec = {}) {
    const int n = s.n();
    const double scale = 24.0;
    const double r = scale / 1.7320508075688772;  // hexagon circumradius
    const int x0 = spec.show_extension ? 0 : 1;
    const int x1 = spec.show_extension ? n + 1 : n;

    double minx, miny, maxx, maxy, cx, cy;
    detail::cell_center(x0, 1, scale, minx, miny);
    detail::cell_center(x1, n, scale, maxx, maxy);
    const double pad = scale;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // viewBox covers all cell centers plus one cell of padding
    double vx = minx - pad, vy = miny - pad;
    double vw = maxx - minx + 2 * pad, vh = maxy - miny + 2 * pad;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           detail::fmt(vx) + " " + detail::fmt(vy) + " " + detail::fmt(vw) + " " +
           detail::fmt(vh) + "\">\n";

    auto hexagon = [&](int x, int y, const char* cls) {
        detail::cell_center(x, y, scale, cx, cy);
        std::string pts;
        for (int k = 0; k < 6; ++k) {
            const double ang = (60.0 * k + 30.0) * 3.14159265358979323846 / 180.0;
            if (k) pts += ' ';
            pts += detail::fmt(cx + r * std::sin(ang)) + "," + detail::fmt(cy - r * std::cos(ang));
        }
        out += std::string("<polygon class=\"") + cls + "\" points=\"" + pts +
               "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
    };

    for (int y = 1; y <= n; ++y)
        for (int x = x0; x <= x1; ++x)
            hexagon(x, y, x == 0 || x == n + 1 ? "ext" : "cell");

    if (spec.show_waste) {
        for (const auto& t : all_triangles(n)) {
            if (!is_wasted(t, s)) continue;
            auto v = t.vertices();  // may overlap the edge columns; draw anyway
            std::string pts;
            for (int k = 0; k < 3; ++k) {
                detail::cell_center(v[k].x, v[k].y, scale, cx, cy);
                if (k) pts += ' ';
                pts += detail::fmt(cx) + "," + detail::fmt(cy);
            }
            out += "<polygon class=\"waste\" points=\"" + pts +
                   "\" fill=\"#6699ee\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
        }
    }

    for (auto c : s.stones()) {
        detail::cell_center(c.x, c.y, scale, cx, cy);
        out += "<circle class=\"stone\" cx=\"" + detail::fmt(cx) + "\" cy=\"" + detail::fmt(cy) +
               "\" r=\"" + detail::fmt(r * 0.62) + "\" fill=\"black\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace hexpath
