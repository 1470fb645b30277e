/*
 * Copyright 2026 The clonedist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Density and quantile-quantile series, with CSV and standalone SVG output.

#include <algorithm>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clonedist/distribution.hpp"
#include "clonedist/errors.hpp"
#include "clonedist/rational.hpp"

namespace clonedist {

struct SeriesPoint {
    Rational x;
    Rational y;

    friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Points with strictly increasing x.
struct Series {
    std::string label;
    std::vector<SeriesPoint> points;
};

struct QQPoint {
    Rational p;
    std::uint32_t q_source = 0;
    std::uint32_t q_target = 0;

    friend bool operator==(const QQPoint&, const QQPoint&) = default;
};

/// Where the transferred threshold sits: quantile rank q* of the source
/// threshold and the pair (t_src, t_tgt).
struct TransferMarker {
    Rational quantile;
    std::uint32_t source_threshold = 0;
    std::uint32_t target_threshold = 0;

    friend bool operator==(const TransferMarker&, const TransferMarker&) = default;
};

struct QQSeries {
    std::string source_label = "source";
    std::string target_label = "target";
    std::vector<QQPoint> points;
    std::optional<TransferMarker> marker;
};

/// (size, totals[size] / W) for every support size, ascending.
inline Series pdf_series(const CloneSizeDistribution& d, std::string label = {}) {
    require_nonempty(d);
    Series s;
    s.label = std::move(label);
    const auto w = d.total_mass();
    for (const auto& [size, count] : d.totals) s.points.push_back({Rational(size), make_rational(count, w)});
    return s;
}

/// 0.500, 0.505, ..., 0.995, then 0.999.
inline std::vector<Rational> default_qq_grid() {
    std::vector<Rational> grid;
    for (int k = 100; k < 200; ++k) grid.push_back(Rational(k, 200));
    grid.push_back(Rational(999, 1000));
    return grid;
}

/// "a:b:step" with exact decimal or fractional endpoints, b inclusive.
inline std::vector<Rational> parse_grid(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw DomainError("grid must look like a:b:step");
    const Rational a = parse_rational(text.substr(0, c1));
    const Rational b = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
    const Rational step = parse_rational(text.substr(c2 + 1));
    if (step <= 0) throw DomainError("grid step must be positive");
    if (a < 0 || b > 1 || a > b) throw DomainError("grid must satisfy 0 <= a <= b <= 1");
    std::vector<Rational> grid;
    for (Rational p = a; p <= b; p += step) grid.push_back(p);
    return grid;
}

inline QQSeries qq_series(const CloneSizeDistribution& src, const CloneSizeDistribution& tgt,
                          std::span<const Rational> grid,
                          std::optional<std::uint32_t> source_threshold = std::nullopt) {
    require_nonempty(src);
    require_nonempty(tgt);
    QQSeries qq;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0 || grid[i] > 1) throw DomainError("grid probability outside [0, 1]");
        if (i > 0 && grid[i] <= grid[i - 1]) throw DomainError("grid must be strictly increasing");
        qq.points.push_back({grid[i], quantile(src, grid[i]), quantile(tgt, grid[i])});
    }
    if (source_threshold) {
        const auto r = transfer_threshold(src, *source_threshold, tgt);
        qq.marker = TransferMarker{r.source_quantile, r.source_threshold, r.target_threshold};
    }
    return qq;
}

namespace detail {

inline void check_sink(std::ostream& out) {
    if (!out) throw IoError("failed to write output");
}

} // namespace detail

inline void emit_csv(const Series& series, std::ostream& out) {
    if (series.points.empty()) throw DomainError("cannot emit an empty series");
    out << "size,density\n";
    for (const auto& pt : series.points) out << to_decimal_string(pt.x) << ',' << to_decimal_string(pt.y) << '\n';
    out.flush();
    detail::check_sink(out);
}

inline void emit_csv(const QQSeries& qq, std::ostream& out) {
    if (qq.points.empty()) throw DomainError("cannot emit an empty QQ series");
    out << "p,q_source,q_target\n";
    for (const auto& pt : qq.points) out << to_decimal_string(pt.p) << ',' << pt.q_source << ',' << pt.q_target << '\n';
    out.flush();
    detail::check_sink(out);
}

/// Reads back the CSV written by emit_csv(const QQSeries&).
inline QQSeries read_qq_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "p,q_source,q_target") throw InputError("QQ CSV has an unexpected header");
    QQSeries qq;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw InputError("QQ CSV row " + std::to_string(row) + " is malformed");
        try {
            qq.points.push_back({parse_rational(line.substr(0, c1)),
                                 static_cast<std::uint32_t>(std::stoul(line.substr(c1 + 1, c2 - c1 - 1))),
                                 static_cast<std::uint32_t>(std::stoul(line.substr(c2 + 1)))});
        } catch (const std::exception&) {
            throw InputError("QQ CSV row " + std::to_string(row) + " is malformed");
        }
    }
    if (qq.points.empty()) throw InputError("QQ CSV has no rows");
    return qq;
}

// SVG ------------------------------------------------------------------------

struct SvgStyle {
    int width = 640;
    int height = 420;
    std::string title;
    std::string x_label;
    std::string y_label;
};

namespace svg {

inline constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#17becf"};

inline std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Range {
    double lo = 0;
    double hi = 1;

    Range padded() const {
        if (hi > lo) return *this;
        return {lo - 0.5, hi + 0.5};
    }
};

/// Maps data coordinates into a plot box inside a panel.
class Frame {
public:
    static constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

    Frame(const SvgStyle& style, Range x, Range y) : style_(style), x_(x.padded()), y_(y.padded()) {}

    double px(double x) const {
        return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (style_.width - kLeft - kRight);
    }
    double py(double y) const {
        return style_.height - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (style_.height - kTop - kBottom);
    }

    void axes(std::ostream& out) const {
        const double x0 = kLeft, x1 = style_.width - kRight;
        const double y0 = style_.height - kBottom, y1 = kTop;
        out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\"" << num(x1 - x0) << "\" height=\""
            << num(y0 - y1) << "\" fill=\"none\" stroke=\"#333333\"/>\n";
        constexpr int ticks = 5;
        for (int i = 0; i <= ticks; ++i) {
            const double xv = x_.lo + (x_.hi - x_.lo) * i / ticks;
            const double yv = y_.lo + (y_.hi - y_.lo) * i / ticks;
            out << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(px(xv)) << "\" y2=\""
                << num(y0 + 5) << "\" stroke=\"#333333\"/>\n";
            out << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(y0 + 18)
                << "\" font-size=\"11\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
            out << "<line x1=\"" << num(x0 - 5) << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << num(x0) << "\" y2=\""
                << num(py(yv)) << "\" stroke=\"#333333\"/>\n";
            out << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(py(yv) + 4)
                << "\" font-size=\"11\" text-anchor=\"end\">" << tick_label(yv) << "</text>\n";
        }
        out << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(style_.height - 18.0)
            << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(style_.x_label) << "</text>\n";
        out << "<text x=\"18\" y=\"" << num((y0 + y1) / 2) << "\" font-size=\"13\" text-anchor=\"middle\" "
            << "transform=\"rotate(-90 18 " << num((y0 + y1) / 2) << ")\">" << escape(style_.y_label) << "</text>\n";
        if (!style_.title.empty()) {
            out << "<text x=\"" << num(style_.width / 2.0) << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">"
                << escape(style_.title) << "</text>\n";
        }
    }

    template <typename Points>
    void polyline(std::ostream& out, const Points& pts, const char* color) const {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : pts) {
            if (!first) out << ' ';
            first = false;
            out << num(px(x)) << ',' << num(py(y));
        }
        out << "\"/>\n";
    }

    void legend(std::ostream& out, std::span<const std::pair<std::string, const char*>> entries) const {
        double y = kTop + 16;
        const double x = style_.width - kRight - 150;
        for (const auto& [label, color] : entries) {
            out << "<rect x=\"" << num(x) << "\" y=\"" << num(y - 9) << "\" width=\"12\" height=\"12\" fill=\""
                << color << "\"/>\n";
            out << "<text x=\"" << num(x + 18) << "\" y=\"" << num(y + 1) << "\" font-size=\"12\">" << escape(label)
                << "</text>\n";
            y += 18;
        }
    }

private:
    SvgStyle style_;
    Range x_;
    Range y_;
};

inline void density_panel(std::ostream& out, std::span<const Series> series, const SvgStyle& style) {
    Range xr{1e300, -1e300};
    Range yr{0, 0};
    for (const auto& s : series) {
        for (const auto& pt : s.points) {
            xr.lo = std::min(xr.lo, to_double(pt.x));
            xr.hi = std::max(xr.hi, to_double(pt.x));
            yr.hi = std::max(yr.hi, to_double(pt.y));
        }
    }
    yr.hi *= 1.05;
    const Frame frame(style, xr, yr);
    frame.axes(out);
    std::vector<std::pair<std::string, const char*>> legend;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        std::vector<std::pair<double, double>> pts;
        for (const auto& pt : series[i].points) pts.emplace_back(to_double(pt.x), to_double(pt.y));
        frame.polyline(out, pts, color);
        for (const auto& [x, y] : pts) {
            out << "<circle cx=\"" << num(frame.px(x)) << "\" cy=\"" << num(frame.py(y)) << "\" r=\"2\" fill=\""
                << color << "\"/>\n";
        }
        legend.emplace_back(series[i].label, color);
    }
    frame.legend(out, legend);
}

inline void qq_panel(std::ostream& out, const QQSeries& qq, const SvgStyle& style) {
    Range r{1e300, -1e300};
    for (const auto& pt : qq.points) {
        r.lo = std::min({r.lo, double(pt.q_source), double(pt.q_target)});
        r.hi = std::max({r.hi, double(pt.q_source), double(pt.q_target)});
    }
    if (qq.marker) {
        r.lo = std::min({r.lo, double(qq.marker->source_threshold), double(qq.marker->target_threshold)});
        r.hi = std::max({r.hi, double(qq.marker->source_threshold), double(qq.marker->target_threshold)});
    }
    const Frame frame(style, r, r);
    frame.axes(out);
    const Range d = r.padded();
    out << "<line x1=\"" << num(frame.px(d.lo)) << "\" y1=\"" << num(frame.py(d.lo)) << "\" x2=\""
        << num(frame.px(d.hi)) << "\" y2=\"" << num(frame.py(d.hi))
        << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    std::vector<std::pair<double, double>> pts;
    for (const auto& pt : qq.points) pts.emplace_back(pt.q_source, pt.q_target);
    frame.polyline(out, pts, kPalette[0]);
    std::vector<std::pair<std::string, const char*>> legend{{qq.source_label + " vs " + qq.target_label, kPalette[0]}};
    if (qq.marker) {
        const double cx = frame.px(qq.marker->source_threshold);
        const double cy = frame.py(qq.marker->target_threshold);
        out << "<rect x=\"" << num(cx - 5) << "\" y=\"" << num(cy - 5)
            << "\" width=\"10\" height=\"10\" fill=\"#d62728\"><title>q=" << to_decimal_string(qq.marker->quantile, 6)
            << " threshold " << qq.marker->source_threshold << " -&gt; " << qq.marker->target_threshold
            << "</title></rect>\n";
        legend.emplace_back("transfer point", "#d62728");
    }
    frame.legend(out, legend);
}

} // namespace svg

/// One SVG document holding the given panels side by side. Each panel is a
/// callable writing its body in panel-local coordinates.
template <typename... Panels>
void emit_svg_document(std::ostream& out, const SvgStyle& style, Panels&&... panels) {
    constexpr int count = sizeof...(Panels);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width * count << "\" height=\""
        << style.height << "\" viewBox=\"0 0 " << style.width * count << ' ' << style.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    int index = 0;
    auto place = [&](auto&& panel) {
        out << "<g transform=\"translate(" << style.width * index++ << ",0)\" font-family=\"sans-serif\">\n";
        panel(out);
        out << "</g>\n";
    };
    (place(panels), ...);
    out << "</svg>\n";
    out.flush();
    detail::check_sink(out);
}

/// Density chart with one polyline per series.
inline void emit_svg(std::span<const Series> series, const SvgStyle& style, std::ostream& out) {
    if (series.empty() || std::any_of(series.begin(), series.end(), [](const Series& s) { return s.points.empty(); })) {
        throw DomainError("cannot plot an empty series");
    }
    emit_svg_document(out, style, [&](std::ostream& o) { svg::density_panel(o, series, style); });
}

/// QQ chart: quantile pairs, the y = x reference line and the transfer marker.
inline void emit_svg(const QQSeries& qq, const SvgStyle& style, std::ostream& out) {
    if (qq.points.empty()) throw DomainError("cannot plot an empty QQ series");
    emit_svg_document(out, style, [&](std::ostream& o) { svg::qq_panel(o, qq, style); });
}

/// Density and QQ charts side by side.
inline void emit_svg(std::span<const Series> series, const SvgStyle& density_style, const QQSeries& qq,
                     const SvgStyle& qq_style, std::ostream& out) {
    if (series.empty() || qq.points.empty()) throw DomainError("cannot plot an empty series");
    emit_svg_document(out, density_style, [&](std::ostream& o) { svg::density_panel(o, series, density_style); },
                      [&](std::ostream& o) { svg::qq_panel(o, qq, qq_style); });
}

} // namespace clonedist
