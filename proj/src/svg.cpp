#include "netgeom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace netgeom {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kArrow = 18.0;

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

// Keeps the part of a convex polygon where s * (v . p + b) >= 0.
std::vector<Pt> clip(const std::vector<Pt>& poly, double vx, double vy, double b, double s) {
    std::vector<Pt> out;
    const auto f = [&](const Pt& p) { return s * (vx * p.x + vy * p.y + b); };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt& a = poly[i];
        const Pt& c = poly[(i + 1) % poly.size()];
        const double fa = f(a), fc = f(c);
        if (fa >= 0) out.push_back(a);
        if ((fa >= 0) != (fc >= 0)) {
            const double t = fa / (fa - fc);
            out.push_back({a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)});
        }
    }
    return out;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

Viewport default_viewport(const std::vector<Region>& regions) {
    Viewport v{0.0, 0.0, 0.0, 0.0};
    bool first = true;
    for (const auto& r : regions) {
        if (r.witness.size() != 2) continue;
        if (first) {
            v = {r.witness(0), r.witness(0), r.witness(1), r.witness(1)};
            first = false;
        }
        v.xmin = std::min(v.xmin, r.witness(0));
        v.xmax = std::max(v.xmax, r.witness(0));
        v.ymin = std::min(v.ymin, r.witness(1));
        v.ymax = std::max(v.ymax, r.witness(1));
    }
    auto pad = [](double& lo, double& hi) {
        const double span = hi - lo;
        lo -= 0.2 * span;
        hi += 0.2 * span;
        if (hi - lo < 2.0) {
            const double mid = 0.5 * (lo + hi);
            lo = mid - 1.0;
            hi = mid + 1.0;
        }
    };
    pad(v.xmin, v.xmax);
    pad(v.ymin, v.ymax);
    return v;
}

std::string render_svg(const Arrangement& A, const std::vector<Region>& regions, const Selection* selection,
                       std::optional<Viewport> viewport) {
    if (A.dimension() != 2) throw Error(ErrorKind::DimensionMismatch, "plot requires dimension 2");
    const Viewport vp = viewport.value_or(default_viewport(regions));
    if (!(vp.xmax > vp.xmin && vp.ymax > vp.ymin)) throw Error(ErrorKind::InvalidArgument, "empty viewport");

    const double scale = kCanvas / std::max(vp.xmax - vp.xmin, vp.ymax - vp.ymin);
    const double width = (vp.xmax - vp.xmin) * scale;
    const double height = (vp.ymax - vp.ymin) * scale;
    const auto px = [&](double x) { return (x - vp.xmin) * scale; };
    const auto py = [&](double y) { return (vp.ymax - y) * scale; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    os << "<rect class=\"viewport\" x=\"0.00\" y=\"0.00\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Selected regions.
    if (selection != nullptr) {
        for (const auto& r : regions) {
            if (!selection->contains(r.label)) continue;
            std::vector<Pt> poly{{vp.xmin, vp.ymin}, {vp.xmax, vp.ymin}, {vp.xmax, vp.ymax}, {vp.xmin, vp.ymax}};
            for (std::size_t i = 0; i < A.size() && !poly.empty(); ++i) {
                const auto& h = A[i];
                poly = clip(poly, h.normal()(0), h.normal()(1), h.offset(), r.label.contains(i) ? 1.0 : -1.0);
            }
            if (poly.size() < 3) continue;
            os << "<polygon class=\"selected\" points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i)
                os << (i ? " " : "") << fmt(px(poly[i].x)) << ',' << fmt(py(poly[i].y));
            os << "\" fill=\"#c8c8c8\" stroke=\"none\"/>\n";
        }
    }

    // Lines with positive-side arrows.
    for (std::size_t i = 0; i < A.size(); ++i) {
        const auto& h = A[i];
        const double vx = h.normal()(0), vy = h.normal()(1), b = h.offset();
        const double nn = vx * vx + vy * vy;
        const Pt p0{-b * vx / nn, -b * vy / nn};
        const Pt d{-vy, vx};
        // Liang-Barsky on the infinite line p0 + t d.
        double t0 = -INFINITY, t1 = INFINITY;
        bool visible = true;
        const auto bound = [&](double p, double q) {
            if (p == 0.0) {
                if (q < 0.0) visible = false;
                return;
            }
            const double t = q / p;
            if (p < 0.0) t0 = std::max(t0, t);
            else t1 = std::min(t1, t);
        };
        bound(-d.x, p0.x - vp.xmin);
        bound(d.x, vp.xmax - p0.x);
        bound(-d.y, p0.y - vp.ymin);
        bound(d.y, vp.ymax - p0.y);
        if (!visible || !(t0 < t1)) continue;

        const Pt a{p0.x + t0 * d.x, p0.y + t0 * d.y};
        const Pt c{p0.x + t1 * d.x, p0.y + t1 * d.y};
        os << "<line class=\"hyperplane\" x1=\"" << fmt(px(a.x)) << "\" y1=\"" << fmt(py(a.y)) << "\" x2=\""
           << fmt(px(c.x)) << "\" y2=\"" << fmt(py(c.y)) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

        // Arrow from the midpoint toward the positive side, in pixel space.
        const double mx = 0.5 * (px(a.x) + px(c.x)), my = 0.5 * (py(a.y) + py(c.y));
        const double len = std::sqrt(nn);
        const double ux = vx / len, uy = -vy / len;
        const double tx = mx + kArrow * ux, ty = my + kArrow * uy;
        os << "<line class=\"arrow\" x1=\"" << fmt(mx) << "\" y1=\"" << fmt(my) << "\" x2=\"" << fmt(tx)
           << "\" y2=\"" << fmt(ty) << "\" stroke=\"#b22222\" stroke-width=\"1.5\"/>\n";
        const double hx = -uy * 4.0, hy = ux * 4.0;
        os << "<polygon class=\"arrowhead\" points=\"" << fmt(tx + ux * 6.0) << ',' << fmt(ty + uy * 6.0) << ' '
           << fmt(tx + hx) << ',' << fmt(ty + hy) << ' ' << fmt(tx - hx) << ',' << fmt(ty - hy)
           << "\" fill=\"#b22222\"/>\n";
        os << "<text class=\"plane-label\" x=\"" << fmt(tx + ux * 14.0) << "\" y=\"" << fmt(ty + uy * 14.0)
           << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#b22222\" text-anchor=\"middle\">P"
           << i + 1 << "</text>\n";
    }

    // Region labels at witnesses.
    for (const auto& r : regions) {
        if (r.witness.size() != 2) continue;
        const double x = r.witness(0), y = r.witness(1);
        if (x < vp.xmin || x > vp.xmax || y < vp.ymin || y > vp.ymax) continue;
        const std::string text = r.label.bits == 0 ? "\xE2\x88\x85" : r.label.to_string();
        os << "<text class=\"region-label\" x=\"" << fmt(px(x)) << "\" y=\"" << fmt(py(y))
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << escape(text)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace netgeom
