#include "sepfam/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <vector>

namespace sepfam {
namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 60.0;

const std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    if (!std::isfinite(v)) return "0";
    std::array<char, 512> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
    if (res.ec != std::errc()) return "0";
    return std::string(buf.data(), res.ptr);
}

std::string escape_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

struct View {
    double cx = 0, cy = 0, scale = 1;

    Pt to_screen(double wx, double wy) const {
        return {kCanvas / 2 + (wx - cx) * scale, kCanvas / 2 - (wy - cy) * scale};
    }
    // World-space rectangle covering the whole canvas, counterclockwise.
    std::vector<Pt> world_rect() const {
        const double hx = kCanvas / (2 * scale), hy = hx;
        return {{cx - hx, cy - hy}, {cx + hx, cy - hy}, {cx + hx, cy + hy}, {cx - hx, cy + hy}};
    }
};

View fit_view(const PointSet& pts) {
    View v;
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const Point& p : pts) {
        const double x = p.x.get_d(), y = p.y.get_d();
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    }
    v.cx = (minx + maxx) / 2;
    v.cy = (miny + maxy) / 2;
    double span = std::max(maxx - minx, maxy - miny);
    if (!(span > 0)) span = 1;
    v.scale = (kCanvas - 2 * kPad) / span;
    return v;
}

// Sutherland-Hodgman clip of a convex polygon with a*x + b*y <= c.
std::vector<Pt> clip(const std::vector<Pt>& poly, double a, double b, double c) {
    std::vector<Pt> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt cur = poly[i];
        const Pt nxt = poly[(i + 1) % n];
        const double fc = a * cur.x + b * cur.y - c;
        const double fn = a * nxt.x + b * nxt.y - c;
        if (fc <= 0) out.push_back(cur);
        if ((fc > 0) != (fn > 0) && fc != fn) {
            const double t = fc / (fc - fn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

void append_path(std::string& out, const std::vector<Pt>& screen_pts, const char* color,
                 bool close) {
    if (screen_pts.empty()) return;
    out += "  <path d=\"";
    for (std::size_t i = 0; i < screen_pts.size(); ++i) {
        out += i == 0 ? "M " : "L ";
        out += fmt(screen_pts[i].x) + ' ' + fmt(screen_pts[i].y) + ' ';
    }
    if (close) out += 'Z';
    out += "\" fill=\"";
    out += close ? color : "none";
    out += "\" fill-opacity=\"0.12\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\"/>\n";
}

void draw_halfplane(std::string& out, const View& v, const Halfplane& h, const char* color) {
    const double a = h.a.get_d(), b = h.b.get_d(), c = h.c.get_d();
    auto region = clip(v.world_rect(), a, b, c);
    std::vector<Pt> screen;
    screen.reserve(region.size());
    for (const Pt& w : region) screen.push_back(v.to_screen(w.x, w.y));
    append_path(out, screen, color, true);
    // Boundary line, drawn long and left to the renderer to crop.
    const double nn = std::hypot(a, b);
    if (nn > 0) {
        const double px = a / nn * (c / nn), py = b / nn * (c / nn);
        const double dx = -b / nn, dy = a / nn;
        const double reach = 4 * kCanvas / v.scale;
        const Pt s1 = v.to_screen(px - dx * reach, py - dy * reach);
        const Pt s2 = v.to_screen(px + dx * reach, py + dy * reach);
        out += "  <line x1=\"" + fmt(s1.x) + "\" y1=\"" + fmt(s1.y) + "\" x2=\"" + fmt(s2.x) +
               "\" y2=\"" + fmt(s2.y) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    }
}

void draw_disc(std::string& out, const View& v, const Disc& d, const char* color) {
    const Pt c = v.to_screen(d.center.x.get_d(), d.center.y.get_d());
    const double r = std::sqrt(std::max(0.0, d.radius_sq.get_d())) * v.scale;
    out += "  <circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(r) +
           "\" fill=\"" + color + "\" fill-opacity=\"0.12\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"/>\n";
}

void draw_polygon(std::string& out, const View& v, const ConvexPolygon& g, const char* color) {
    std::vector<Pt> screen;
    screen.reserve(g.vertices.size());
    for (const Point& p : g.vertices) screen.push_back(v.to_screen(p.x.get_d(), p.y.get_d()));
    if (screen.size() == 1) {
        out += "  <circle cx=\"" + fmt(screen[0].x) + "\" cy=\"" + fmt(screen[0].y) +
               "\" r=\"5\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        return;
    }
    append_path(out, screen, color, screen.size() > 2);
}

}  // namespace

std::string render_svg(const PointSet& pts, const SeparatingFamily* fam) {
    if (pts.empty()) throw precondition_error("render_svg: point set is empty");
    const View v = fit_view(pts);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    if (fam && !fam->provenance.empty())
        out += "  <title>" + escape_text(fam->provenance) + "</title>\n";
    out += "  <rect width=\"800\" height=\"800\" fill=\"white\" stroke=\"#cccccc\"/>\n";

    if (fam) {
        for (std::size_t i = 0; i < fam->separators.size(); ++i) {
            const char* color = kPalette[i % kPalette.size()];
            const Separator& s = fam->separators[i];
            if (const auto* h = std::get_if<Halfplane>(&s))
                draw_halfplane(out, v, *h, color);
            else if (const auto* d = std::get_if<Disc>(&s))
                draw_disc(out, v, *d, color);
            else
                draw_polygon(out, v, std::get<ConvexPolygon>(s), color);
        }
    }

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Pt s = v.to_screen(pts[i].x.get_d(), pts[i].y.get_d());
        out += "  <circle cx=\"" + fmt(s.x) + "\" cy=\"" + fmt(s.y) +
               "\" r=\"3.5\" fill=\"#111111\"/>\n";
        out += "  <text x=\"" + fmt(s.x + 6) + "\" y=\"" + fmt(s.y - 6) +
               "\" font-family=\"monospace\" font-size=\"13\">" + std::to_string(i) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sepfam
