#pragma once

#include "hypmirror/config.hpp"
#include "hypmirror/tropical.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace hypmirror {

enum class SvgKind { Real, Tropical };

namespace detail {

// exact half-up rounding to two decimals keeps the output deterministic
inline std::string fmt2(const Rational& r) {
    Int v = floor_div(num(r) * 200 + den(r), den(r) * 2);
    bool negative = v < 0;
    if (negative)
        v = -v;
    Int i = v / 100, f = v % 100;
    std::ostringstream os;
    if (negative && (i != 0 || f != 0))
        os << "-";
    os << i << ".";
    if (f < 10)
        os << "0";
    os << f;
    return os.str();
}

struct Box {
    Rational minx, maxx, miny, maxy;
};

struct Mapper {
    Box box;
    RenderOptions opts;

    Rational px(const Rational& x) const {
        Rational span = box.maxx - box.minx;
        return Rational(opts.margin) +
               (x - box.minx) * Rational(opts.width - 2 * opts.margin) / span;
    }
    Rational py(const Rational& y) const {
        Rational span = box.maxy - box.miny;
        return Rational(opts.height - opts.margin) -
               (y - box.miny) * Rational(opts.height - 2 * opts.margin) / span;
    }
};

inline Box bounding_box(const std::vector<std::vector<Rational>>& points, int d) {
    Box b{0, 0, 0, 0};
    bool first = true;
    for (const auto& p : points) {
        Rational x = p.empty() ? Rational(0) : p[0];
        Rational y = d >= 2 && p.size() > 1 ? p[1] : Rational(0);
        if (first) {
            b = Box{x, x, y, y};
            first = false;
        } else {
            b.minx = std::min(b.minx, x);
            b.maxx = std::max(b.maxx, x);
            b.miny = std::min(b.miny, y);
            b.maxy = std::max(b.maxy, y);
        }
    }
    b.minx -= 1;
    b.maxx += 1;
    b.miny -= 1;
    b.maxy += 1;
    return b;
}

inline void open_svg(std::ostringstream& os, const RenderOptions& opts) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\""
       << opts.height << "\" viewBox=\"0 0 " << opts.width << " " << opts.height << "\">\n";
    os << "  <rect class=\"canvas\" x=\"0\" y=\"0\" width=\"" << opts.width << "\" height=\""
       << opts.height << "\" fill=\"white\" stroke=\"none\"/>\n";
}

inline void emit_axes(std::ostringstream& os, const Mapper& m, int d) {
    os << "  <g class=\"axes\" stroke=\"lightgray\" stroke-width=\"1\">\n";
    Rational y0 = d >= 2 ? m.py(Rational(0)) : Rational(m.opts.height) / 2;
    os << "    <line x1=\"" << m.opts.margin << "\" y1=\"" << fmt2(y0) << "\" x2=\""
       << m.opts.width - m.opts.margin << "\" y2=\"" << fmt2(y0) << "\"/>\n";
    if (d >= 2) {
        Rational x0 = m.px(Rational(0));
        os << "    <line x1=\"" << fmt2(x0) << "\" y1=\"" << m.opts.margin << "\" x2=\""
           << fmt2(x0) << "\" y2=\"" << m.opts.height - m.opts.margin << "\"/>\n";
    }
    os << "  </g>\n";
}

// the segment of {w + t v} allowed by the cell constraints and the box
inline std::pair<Rational, Rational> clip_ray(const std::vector<Rational>& w,
                                              const std::vector<Rational>& v,
                                              const LinearSystem& sys, const Box& box) {
    // wide sentinels; the box rows always bound the interval
    Rational lo(-1), hi(1);
    bool loSet = false, hiSet = false;
    auto bound = [&](const std::vector<Rational>& c, const Rational& rhs) {
        Rational slope = 0, at = 0;
        for (size_t i = 0; i < c.size(); ++i) {
            slope += c[i] * v[i];
            at += c[i] * w[i];
        }
        if (slope == 0)
            return;
        Rational t = (rhs - at) / slope;
        if (slope > 0) {
            if (!hiSet || t < hi) {
                hi = t;
                hiSet = true;
            }
        } else if (!loSet || t > lo) {
            lo = t;
            loSet = true;
        }
    };
    for (const auto& row : sys.rows)
        if (row.rel != Rel::EQ)
            bound(row.c, row.rhs);
    size_t dim = w.size();
    if (dim >= 1) {
        std::vector<Rational> ex(dim, 0);
        ex[0] = 1;
        bound(ex, box.maxx);
        ex[0] = -1;
        bound(ex, -box.minx);
    }
    if (dim >= 2) {
        std::vector<Rational> ey(dim, 0);
        ey[1] = 1;
        bound(ey, box.maxy);
        ey[1] = -1;
        bound(ey, -box.miny);
    }
    return {lo, hi};
}

} // namespace detail

// combinatorics-faithful picture of the affine arrangement: one group per
// hyperplane, clipped to the witness bounding box
inline std::string emit_svg_real(const HypertoricData& h, const RenderOptions& opts = {}) {
    if (h.d > 2)
        throw input_error("SVG rendering requires d <= 2");
    auto planes = real_hyperplanes(h);

    std::vector<std::vector<Rational>> anchors{{Rational(0), Rational(0)}};
    if (h.d == 1) {
        for (const auto& p : planes)
            anchors.push_back({p.offset / Rational(p.normal[0])});
    } else {
        for (size_t i = 0; i < planes.size(); ++i)
            for (size_t j = i + 1; j < planes.size(); ++j) {
                const auto& a = planes[i];
                const auto& b = planes[j];
                Rational det = Rational(a.normal[0]) * Rational(b.normal[1]) -
                               Rational(a.normal[1]) * Rational(b.normal[0]);
                if (det == 0)
                    continue;
                anchors.push_back(
                    {(a.offset * Rational(b.normal[1]) - Rational(a.normal[1]) * b.offset) / det,
                     (Rational(a.normal[0]) * b.offset - a.offset * Rational(b.normal[0])) / det});
            }
    }
    detail::Box box = detail::bounding_box(anchors, h.d);
    detail::Mapper m{box, opts};

    std::ostringstream os;
    detail::open_svg(os, opts);
    detail::emit_axes(os, m, h.d);
    for (const auto& p : planes) {
        os << "  <g class=\"hyperplane\" id=\"H" << p.index + 1
           << "\" stroke=\"black\" stroke-width=\"1.5\">\n";
        if (h.d == 1) {
            Rational x = m.px(p.offset / Rational(p.normal[0]));
            Rational yc = Rational(opts.height) / 2;
            os << "    <path d=\"M " << detail::fmt2(x) << " " << detail::fmt2(yc - 6) << " L "
               << detail::fmt2(x) << " " << detail::fmt2(yc + 6) << "\"/>\n";
        } else {
            // clip the full line to the box along its direction vector
            std::vector<Rational> w(2), v{Rational(-p.normal[1]), Rational(p.normal[0])};
            if (p.normal[0] != 0)
                w = {p.offset / Rational(p.normal[0]), Rational(0)};
            else
                w = {Rational(0), p.offset / Rational(p.normal[1])};
            LinearSystem empty;
            empty.dim = 2;
            auto [t0, t1] = detail::clip_ray(w, v, empty, box);
            Rational x0 = w[0] + t0 * v[0], y0 = w[1] + t0 * v[1];
            Rational x1 = w[0] + t1 * v[0], y1 = w[1] + t1 * v[1];
            os << "    <path d=\"M " << detail::fmt2(m.px(x0)) << " " << detail::fmt2(m.py(y0))
               << " L " << detail::fmt2(m.px(x1)) << " " << detail::fmt2(m.py(y1)) << "\"/>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// tropical picture: walls grouped per hyperplane, strata as markers,
// chamber labels at their witness points
inline std::string emit_svg_tropical(const TropicalArrangement& arr, const RenderOptions& opts = {}) {
    if (arr.d > 2)
        throw input_error("SVG rendering requires d <= 2");

    std::vector<std::vector<Rational>> pts;
    for (const auto& cell : arr.cells)
        pts.push_back(cell.witness);
    if (pts.empty())
        pts.push_back(std::vector<Rational>(static_cast<size_t>(arr.d), Rational(0)));
    detail::Box box = detail::bounding_box(pts, arr.d);
    detail::Mapper m{box, opts};

    std::ostringstream os;
    detail::open_svg(os, opts);
    detail::emit_axes(os, m, arr.d);

    for (int k = 0; k < arr.n; ++k) {
        os << "  <g class=\"hyperplane\" id=\"H" << k + 1
           << "\" stroke=\"black\" stroke-width=\"1.5\">\n";
        if (arr.d == 2) {
            for (const auto& cell : arr.cells) {
                if (cell.dim != arr.d - 1)
                    continue;
                auto ties = cell.ties();
                if (ties.size() != 1 || ties.begin()->first != k)
                    continue;
                // direction spans the tie equality, endpoints from the cell closure
                IntMatrix rows = detail::tie_rows(arr, cell.val);
                IntMatrix ker = kernel_lattice(rows);
                std::vector<Rational> v{Rational(ker.at(0, 0)), Rational(ker.at(0, 1))};
                LinearSystem sys;
                sys.dim = arr.d;
                for (int kk = 0; kk < arr.n; ++kk)
                    detail::add_cell_constraints(sys, arr.hyp[static_cast<size_t>(kk)],
                                                 cell.val[static_cast<size_t>(kk)]);
                auto [t0, t1] = detail::clip_ray(cell.witness, v, sys, box);
                Rational x0 = cell.witness[0] + t0 * v[0], y0 = cell.witness[1] + t0 * v[1];
                Rational x1 = cell.witness[0] + t1 * v[0], y1 = cell.witness[1] + t1 * v[1];
                os << "    <path d=\"M " << detail::fmt2(m.px(x0)) << " " << detail::fmt2(m.py(y0))
                   << " L " << detail::fmt2(m.px(x1)) << " " << detail::fmt2(m.py(y1))
                   << "\"/>\n";
            }
        } else {
            for (const auto& cell : arr.cells) {
                if (cell.dim != 0)
                    continue;
                auto ties = cell.ties();
                if (ties.size() != 1 || ties.begin()->first != k)
                    continue;
                Rational x = m.px(cell.witness[0]);
                Rational yc = Rational(opts.height) / 2;
                os << "    <path d=\"M " << detail::fmt2(x) << " " << detail::fmt2(yc - 6)
                   << " L " << detail::fmt2(x) << " " << detail::fmt2(yc + 6) << "\"/>\n";
            }
        }
        os << "  </g>\n";
    }

    os << "  <g class=\"strata\" fill=\"crimson\">\n";
    for (const auto& cell : arr.cells) {
        if (cell.is_chamber())
            continue;
        Rational cx = m.px(cell.witness[0]);
        Rational cy = arr.d >= 2 ? m.py(cell.witness[1]) : Rational(opts.height) / 2;
        os << "    <circle class=\"stratum\" cx=\"" << detail::fmt2(cx) << "\" cy=\""
           << detail::fmt2(cy) << "\" r=\"3\"/>\n";
    }
    os << "  </g>\n";

    os << "  <g class=\"chambers\" font-family=\"monospace\" font-size=\"11\">\n";
    for (int ci : arr.chamberCells) {
        const auto& cell = arr.cells[static_cast<size_t>(ci)];
        Rational cx = m.px(cell.witness[0]);
        Rational cy = arr.d >= 2 ? m.py(cell.witness[1]) : Rational(opts.height) / 2 - 10;
        std::string label = "(";
        for (size_t k = 0; k < cell.val.size(); ++k) {
            if (k)
                label += ",";
            label += std::to_string(cell.val[k][0]);
        }
        label += ")";
        os << "    <text class=\"chamber\" x=\"" << detail::fmt2(cx) << "\" y=\""
           << detail::fmt2(cy) << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

inline std::string emit_svg(const HypertoricData& h, const TropicalArrangement& arr, SvgKind kind,
                            const RenderOptions& opts = {}) {
    return kind == SvgKind::Real ? emit_svg_real(h, opts) : emit_svg_tropical(arr, opts);
}

} // namespace hypmirror
