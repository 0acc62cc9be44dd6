#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "collatz/geometry.hpp"
#include "collatz/rational.hpp"
#include "collatz/sequence.hpp"

namespace collatz {

enum class emit_format { svg, csv, json };

inline emit_format parse_emit_format(std::string_view s) {
    if (s == "svg") return emit_format::svg;
    if (s == "csv") return emit_format::csv;
    if (s == "json") return emit_format::json;
    throw std::invalid_argument("unknown format: " + std::string(s));
}

/// Axis-aligned window (xmin,xmax) x (ymin,ymax) in graph coordinates.
struct viewport {
    rational xmin;
    rational xmax;
    rational ymin;
    rational ymax;
};

/// Window framing the whole point set: x in (-4,3), y in (-4,1).
inline viewport default_viewport() {
    return viewport{rational(-4), rational(3), rational(-4), rational(1)};
}

namespace detail {

inline void require_nonempty(const viewport& vp) {
    if (vp.xmin >= vp.xmax || vp.ymin >= vp.ymax) {
        throw std::domain_error("viewport is empty: need xmin < xmax and ymin < ymax");
    }
}

/// Digits run together, "" for the empty sequence. Only used for graphs
/// over {1,2}, so single characters per item are unambiguous.
inline std::string seq_word(const finite_seq& a) {
    std::string s;
    s.reserve(a.size());
    for (unsigned q : a) s += std::to_string(q);
    return s;
}

/// Fixed three fractional digits, round half away from zero, for pixel
/// coordinates. Exact arithmetic in, deterministic text out.
inline std::string fixed3(const rational& r) {
    const bool negative = r.num() < 0;
    bigint scaled = div_round_nearest(boost::multiprecision::abs(r.num()) * 1000, r.den());
    std::string body = scaled.str();
    if (body.size() < 4) body.insert(0, 4 - body.size(), '0');
    body.insert(body.size() - 3, 1, '.');
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return (negative && scaled != 0 ? "-" : "") + body;
}

inline constexpr unsigned svg_width_px = 800;

struct pixel_map {
    rational scale;  // pixels per coordinate unit, shared by both axes
    rational xmin;
    rational ymax;
    unsigned height;

    explicit pixel_map(const viewport& vp)
        : scale(rational(svg_width_px) / (vp.xmax - vp.xmin)),
          xmin(vp.xmin),
          ymax(vp.ymax) {
        const rational h = scale * (vp.ymax - vp.ymin);
        height = static_cast<unsigned>(div_round_nearest(h.num(), h.den()));
    }

    std::string px(const rational& x) const { return fixed3((x - xmin) * scale); }
    // y grows upward in the plane but downward in SVG, so measure from the top
    std::string py(const rational& y) const { return fixed3((ymax - y) * scale); }
};

inline std::string emit_svg(const fractal_graph& g, const viewport& vp) {
    const pixel_map map(vp);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(svg_width_px) + "\" height=\"" + std::to_string(map.height) +
           "\" viewBox=\"0 0 " + std::to_string(svg_width_px) + " " +
           std::to_string(map.height) + "\">\n";
    out += "  <g stroke=\"#556270\" stroke-width=\"0.6\">\n";
    for (const auto& [parent, child] : g.edges) {
        const point& p = g.nodes[parent].pt;
        const point& c = g.nodes[child].pt;
        out += "    <line x1=\"" + map.px(p.x.value()) + "\" y1=\"" + map.py(p.y.value()) +
               "\" x2=\"" + map.px(c.x.value()) + "\" y2=\"" + map.py(c.y.value()) + "\"/>\n";
    }
    out += "  </g>\n";
    out += "  <g fill=\"#c0392b\">\n";
    for (const fractal_node& node : g.nodes) {
        out += "    <circle cx=\"" + map.px(node.pt.x.value()) + "\" cy=\"" +
               map.py(node.pt.y.value()) + "\" r=\"1.5\"/>\n";
    }
    out += "  </g>\n";
    out += "</svg>\n";
    return out;
}

inline std::string emit_csv(const fractal_graph& g, unsigned precision) {
    std::string out = "seq,x_exact,y_exact,x_dec,y_dec\n";
    for (const fractal_node& node : g.nodes) {
        out += seq_word(node.seq);
        out += ',' + node.pt.x.value().str_ratio();
        out += ',' + node.pt.y.value().str_ratio();
        out += ',' + node.pt.x.value().decimal(precision);
        out += ',' + node.pt.y.value().decimal(precision);
        out += '\n';
    }
    out += "\nparent_seq,child_seq\n";
    for (const auto& [parent, child] : g.edges) {
        out += seq_word(g.nodes[parent].seq) + ',' + seq_word(g.nodes[child].seq) + '\n';
    }
    return out;
}

inline std::string emit_json(const fractal_graph& g, unsigned precision) {
    nlohmann::ordered_json doc;
    doc["depth"] = g.depth;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const fractal_node& node : g.nodes) {
        doc["nodes"].push_back({{"seq", seq_word(node.seq)},
                                {"x", node.pt.x.value().str_ratio()},
                                {"y", node.pt.y.value().str_ratio()},
                                {"x_dec", node.pt.x.value().decimal(precision)},
                                {"y_dec", node.pt.y.value().decimal(precision)}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [parent, child] : g.edges) {
        doc["edges"].push_back({parent, child});
    }
    return doc.dump(2) + "\n";
}

}  // namespace detail

/// Serializes a graph for plotting. Exact coordinates go out as p/q strings
/// (csv/json) alongside decimal renderings at `precision` significant
/// digits; svg projects them into the viewport at a shared scale for both
/// axes. Output is deterministic byte-for-byte.
inline std::string emit(const fractal_graph& g, emit_format format, const viewport& vp,
                        unsigned precision) {
    detail::require_nonempty(vp);
    if (precision == 0) throw std::domain_error("precision must be at least 1");
    switch (format) {
        case emit_format::svg: return detail::emit_svg(g, vp);
        case emit_format::csv: return detail::emit_csv(g, precision);
        case emit_format::json: return detail::emit_json(g, precision);
    }
    throw std::domain_error("unknown emit format");
}

}  // namespace collatz
