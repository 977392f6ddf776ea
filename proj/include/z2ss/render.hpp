#pragma once

// Deterministic ASCII and SVG renderings of page grids and the two ground-ring
// charts.  Identical inputs produce identical bytes; golden tests pin the
// output.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "z2ss/charts.hpp"
#include "z2ss/ground.hpp"
#include "z2ss/spectra.hpp"

namespace z2ss {

namespace detail {

inline std::string pad_left(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace detail

// Page grid in the layout of the charts: rows labeled by q, top row first,
// columns by p; unknown cells print "??".
inline std::string render_page_ascii(const Page& page, int window) {
    std::ostringstream out;
    const size_t cell_w = 4;
    const size_t label_w = std::to_string(window).size() + 1;
    out << detail::pad_left("q", label_w) << "\n";
    for (int q = window; q >= 0; --q) {
        out << detail::pad_left(std::to_string(q), label_w) << " |";
        for (int p = 0; p <= window; ++p) {
            const Cell& c = page.cell(p, q);
            out << detail::pad_left(c.unknown ? "??" : std::to_string(c.dim), cell_w);
        }
        out << "\n";
    }
    out << detail::pad_left("", label_w) << " +" << std::string((static_cast<size_t>(window) + 1) * cell_w, '-')
        << "\n";
    out << detail::pad_left("", label_w) << "  ";
    for (int p = 0; p <= window; ++p) out << detail::pad_left(std::to_string(p), cell_w);
    out << "  p\n";
    out << "weight " << page.weight() << ", page E" << page.index() << "\n";
    return out.str();
}

// The ground-ring chart: "*" where the point cohomology is nonzero, "." where
// it vanishes, with the named classes listed underneath.
inline std::string render_ground_ascii(int pmin, int pmax, int wmin, int wmax) {
    std::ostringstream out;
    const size_t cell_w = 3;
    const size_t label_w = std::max(std::to_string(wmin).size(), std::to_string(wmax).size()) + 1;
    out << detail::pad_left("w", label_w) << "\n";
    for (int w = wmax; w >= wmin; --w) {
        out << detail::pad_left(std::to_string(w), label_w) << " |";
        for (int p = pmin; p <= pmax; ++p) out << detail::pad_left(point_dim({p, w}) != 0 ? "*" : ".", cell_w);
        out << "\n";
    }
    out << detail::pad_left("", label_w) << " +"
        << std::string(static_cast<size_t>(pmax - pmin + 1) * cell_w, '-') << "\n";
    out << detail::pad_left("", label_w) << "  ";
    for (int p = pmin; p <= pmax; ++p) out << detail::pad_left(std::to_string(p), cell_w);
    out << "  p\n";

    struct Named {
        const char* text;
        Bidegree at;
    };
    const Named named[] = {
        {"1", {0, 0}}, {"rho", {1, 1}}, {"tau", {0, 1}}, {"theta", {0, -2}}, {"theta/rho", {-1, -3}},
        {"theta/tau", {0, -3}},
    };
    out << "named classes:\n";
    for (const Named& n : named)
        if (n.at.p >= pmin && n.at.p <= pmax && n.at.w >= wmin && n.at.w <= wmax)
            out << "  " << n.text << " = (" << n.at.p << "," << n.at.w << ")\n";
    return out.str();
}

// The free-orbit chart: the Laurent ring occupies the p = 0 column.
inline std::string render_orbit_ascii(int pmin, int pmax, int wmin, int wmax) {
    std::ostringstream out;
    const size_t cell_w = 3;
    const size_t label_w = std::max(std::to_string(wmin).size(), std::to_string(wmax).size()) + 1;
    out << detail::pad_left("w", label_w) << "\n";
    for (int w = wmax; w >= wmin; --w) {
        out << detail::pad_left(std::to_string(w), label_w) << " |";
        for (int p = pmin; p <= pmax; ++p) out << detail::pad_left(orbit_dim({p, w}) != 0 ? "*" : ".", cell_w);
        out << "\n";
    }
    out << detail::pad_left("", label_w) << " +"
        << std::string(static_cast<size_t>(pmax - pmin + 1) * cell_w, '-') << "\n";
    out << detail::pad_left("", label_w) << "  ";
    for (int p = pmin; p <= pmax; ++p) out << detail::pad_left(std::to_string(p), cell_w);
    out << "  p\n";
    out << "named classes:\n";
    if (pmin <= 0 && 0 <= pmax) {
        if (wmin <= 0 && 0 <= wmax) out << "  1 = (0,0)\n";
        if (wmin <= 1 && 1 <= wmax) out << "  t = (0,1)\n";
        if (wmin <= -1 && -1 <= wmax) out << "  t^-1 = (0,-1)\n";
    }
    return out.str();
}

// --- SVG ------------------------------------------------------------------------

namespace detail {

constexpr int kSvgCell = 36;

inline void svg_open(std::ostringstream& out, int width, int height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<style>text{font-family:monospace;font-size:12px;text-anchor:middle;}"
           ".axis{font-size:11px;fill:#444;}</style>\n";
}

inline void svg_cell_text(std::ostringstream& out, int x, int y, const std::string& text) {
    out << "<text x=\"" << x << "\" y=\"" << y << "\">" << text << "</text>\n";
}

}  // namespace detail

inline std::string render_page_svg(const Page& page, int window) {
    using detail::kSvgCell;
    const int cols = window + 1;
    const int rows = window + 1;
    const int margin = kSvgCell;
    const int width = margin + cols * kSvgCell + kSvgCell / 2;
    const int height = margin / 2 + rows * kSvgCell + margin;
    std::ostringstream out;
    detail::svg_open(out, width, height);
    for (int q = 0; q <= window; ++q) {
        for (int p = 0; p <= window; ++p) {
            const int x = margin + p * kSvgCell;
            const int y = margin / 2 + (window - q) * kSvgCell;
            const Cell& c = page.cell(p, q);
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kSvgCell << "\" height=\"" << kSvgCell
                << "\" fill=\"" << (c.unknown ? "#f3e2c0" : (c.dim > 0 ? "#dce8f5" : "#ffffff"))
                << "\" stroke=\"#999\"/>\n";
            const std::string text = c.unknown ? "??" : (c.dim > 0 ? std::to_string(c.dim) : "");
            if (!text.empty()) detail::svg_cell_text(out, x + kSvgCell / 2, y + kSvgCell / 2 + 4, text);
        }
    }
    for (int p = 0; p <= window; ++p)
        out << "<text class=\"axis\" x=\"" << margin + p * kSvgCell + kSvgCell / 2 << "\" y=\""
            << margin / 2 + rows * kSvgCell + 14 << "\">" << p << "</text>\n";
    for (int q = 0; q <= window; ++q)
        out << "<text class=\"axis\" x=\"" << margin / 2 << "\" y=\""
            << margin / 2 + (window - q) * kSvgCell + kSvgCell / 2 + 4 << "\">" << q << "</text>\n";
    out << "<text class=\"axis\" x=\"" << margin + cols * kSvgCell / 2 << "\" y=\"" << height - 4 << "\">weight "
        << page.weight() << ", page E" << page.index() << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

// Lattice chart of the ground ring with the two cones shaded.
inline std::string render_ground_svg(int pmin, int pmax, int wmin, int wmax) {
    using detail::kSvgCell;
    const int cols = pmax - pmin + 1;
    const int rows = wmax - wmin + 1;
    const int margin = kSvgCell;
    const int width = margin + cols * kSvgCell + kSvgCell / 2;
    const int height = margin / 2 + rows * kSvgCell + margin;
    auto cx = [&](int p) { return margin + (p - pmin) * kSvgCell + kSvgCell / 2; };
    auto cy = [&](int w) { return margin / 2 + (wmax - w) * kSvgCell + kSvgCell / 2; };
    std::ostringstream out;
    detail::svg_open(out, width, height);

    // Shade the two cones cellwise so the region is exact at every lattice point.
    for (int w = wmin; w <= wmax; ++w)
        for (int p = pmin; p <= pmax; ++p)
            if (point_dim({p, w}) != 0)
                out << "<rect x=\"" << cx(p) - kSvgCell / 2 << "\" y=\"" << cy(w) - kSvgCell / 2 << "\" width=\""
                    << kSvgCell << "\" height=\"" << kSvgCell << "\" fill=\"" << (w >= 0 ? "#dce8f5" : "#e5dcf5")
                    << "\"/>\n";
    // Axes.
    if (pmin <= 0 && 0 <= pmax)
        out << "<line x1=\"" << cx(0) << "\" y1=\"" << cy(wmax) - kSvgCell / 2 << "\" x2=\"" << cx(0) << "\" y2=\""
            << cy(wmin) + kSvgCell / 2 << "\" stroke=\"#444\"/>\n";
    if (wmin <= 0 && 0 <= wmax)
        out << "<line x1=\"" << cx(pmin) - kSvgCell / 2 << "\" y1=\"" << cy(0) << "\" x2=\"" << cx(pmax) + kSvgCell / 2
            << "\" y2=\"" << cy(0) << "\" stroke=\"#444\"/>\n";
    // Lattice points.
    for (int w = wmin; w <= wmax; ++w)
        for (int p = pmin; p <= pmax; ++p)
            if (point_dim({p, w}) != 0)
                out << "<circle cx=\"" << cx(p) << "\" cy=\"" << cy(w) << "\" r=\"3\" fill=\"#333\"/>\n";
    struct Named {
        const char* text;
        Bidegree at;
    };
    const Named named[] = {
        {"1", {0, 0}}, {"rho", {1, 1}}, {"tau", {0, 1}}, {"theta", {0, -2}}, {"theta/rho", {-1, -3}},
        {"theta/tau", {0, -3}},
    };
    for (const Named& n : named)
        if (n.at.p >= pmin && n.at.p <= pmax && n.at.w >= wmin && n.at.w <= wmax)
            detail::svg_cell_text(out, cx(n.at.p) + kSvgCell / 3, cy(n.at.w) - 6, n.text);
    for (int p = pmin; p <= pmax; ++p)
        out << "<text class=\"axis\" x=\"" << cx(p) << "\" y=\"" << height - 18 << "\">" << p << "</text>\n";
    for (int w = wmin; w <= wmax; ++w)
        out << "<text class=\"axis\" x=\"" << margin / 2 - 6 << "\" y=\"" << cy(w) + 4 << "\">" << w << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

// Free-module chart of a presentation: one cone based at every generator.
// Rows are weights, columns topological degrees; entries are fixed-level dims.
inline std::string render_module_ascii(const ModulePresentation& m, int window) {
    std::ostringstream out;
    const size_t cell_w = 3;
    const size_t label_w = std::to_string(-window).size() + 1;
    out << detail::pad_left("w", label_w) << "\n";
    for (int w = window; w >= -window; --w) {
        out << detail::pad_left(std::to_string(w), label_w) << " |";
        for (int p = 0; p <= window; ++p) {
            const int d = fixed_dim(m, {p, w});
            out << detail::pad_left(d == 0 ? "." : std::to_string(d), cell_w);
        }
        out << "\n";
    }
    out << detail::pad_left("", label_w) << " +" << std::string((static_cast<size_t>(window) + 1) * cell_w, '-')
        << "\n";
    out << detail::pad_left("", label_w) << "  ";
    for (int p = 0; p <= window; ++p) out << detail::pad_left(std::to_string(p), cell_w);
    out << "  p\n";
    out << "generators:";
    for (const Generator& g : m.generators)
        out << " " << g.label << "(" << g.degree.p << "," << g.degree.w << ")";
    out << "\n";
    return out.str();
}

inline std::string render_module_svg(const ModulePresentation& m, int window) {
    using detail::kSvgCell;
    const int pmin = 0;
    const int pmax = window;
    const int wmin = -window;
    const int wmax = window;
    const int cols = pmax - pmin + 1;
    const int rows = wmax - wmin + 1;
    const int margin = kSvgCell;
    const int width = margin + cols * kSvgCell + kSvgCell / 2;
    const int height = margin / 2 + rows * kSvgCell + margin;
    auto cx = [&](int p) { return margin + (p - pmin) * kSvgCell + kSvgCell / 2; };
    auto cy = [&](int w) { return margin / 2 + (wmax - w) * kSvgCell + kSvgCell / 2; };
    std::ostringstream out;
    detail::svg_open(out, width, height);
    for (int w = wmin; w <= wmax; ++w)
        for (int p = pmin; p <= pmax; ++p) {
            const int d = fixed_dim(m, {p, w});
            if (d == 0) continue;
            out << "<rect x=\"" << cx(p) - kSvgCell / 2 << "\" y=\"" << cy(w) - kSvgCell / 2 << "\" width=\""
                << kSvgCell << "\" height=\"" << kSvgCell << "\" fill=\"" << (d > 1 ? "#b9d2ec" : "#dce8f5")
                << "\"/>\n";
            if (d > 1) detail::svg_cell_text(out, cx(p), cy(w) + 4, std::to_string(d));
        }
    for (const Generator& g : m.generators) {
        if (g.degree.p > pmax || g.degree.w > wmax || g.degree.w < wmin) continue;
        out << "<circle cx=\"" << cx(g.degree.p) << "\" cy=\"" << cy(g.degree.w) << "\" r=\"3\" fill=\"#333\"/>\n";
        detail::svg_cell_text(out, cx(g.degree.p) + kSvgCell / 3, cy(g.degree.w) - 6, g.label);
    }
    for (int p = pmin; p <= pmax; ++p)
        out << "<text class=\"axis\" x=\"" << cx(p) << "\" y=\"" << height - 18 << "\">" << p << "</text>\n";
    for (int w = wmin; w <= wmax; ++w)
        out << "<text class=\"axis\" x=\"" << margin / 2 - 6 << "\" y=\"" << cy(w) + 4 << "\">" << w << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

inline std::string render_orbit_svg(int pmin, int pmax, int wmin, int wmax) {
    using detail::kSvgCell;
    const int cols = pmax - pmin + 1;
    const int rows = wmax - wmin + 1;
    const int margin = kSvgCell;
    const int width = margin + cols * kSvgCell + kSvgCell / 2;
    const int height = margin / 2 + rows * kSvgCell + margin;
    auto cx = [&](int p) { return margin + (p - pmin) * kSvgCell + kSvgCell / 2; };
    auto cy = [&](int w) { return margin / 2 + (wmax - w) * kSvgCell + kSvgCell / 2; };
    std::ostringstream out;
    detail::svg_open(out, width, height);
    for (int w = wmin; w <= wmax; ++w)
        for (int p = pmin; p <= pmax; ++p)
            if (orbit_dim({p, w}) != 0)
                out << "<circle cx=\"" << cx(p) << "\" cy=\"" << cy(w) << "\" r=\"3\" fill=\"#333\"/>\n";
    for (int p = pmin; p <= pmax; ++p)
        out << "<text class=\"axis\" x=\"" << cx(p) << "\" y=\"" << height - 18 << "\">" << p << "</text>\n";
    for (int w = wmin; w <= wmax; ++w)
        out << "<text class=\"axis\" x=\"" << margin / 2 - 6 << "\" y=\"" << cy(w) + 4 << "\">" << w << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace z2ss
