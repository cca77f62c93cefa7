#include "patience/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <tuple>

#include "patience/errors.hpp"
#include "patience/io.hpp"

namespace patience {

namespace {

// Splits `points` into successive layers of product-order-minimal points.
std::vector<Shadowline> peel(std::vector<LatticePoint> points) {
    std::vector<Shadowline> lines;
    std::sort(points.begin(), points.end());
    while (!points.empty()) {
        // After sorting by (x, y), a point is minimal iff its y is below
        // every y seen before it.
        std::vector<LatticePoint> minimal;
        std::vector<LatticePoint> rest;
        int lowest = std::numeric_limits<int>::max();
        for (const LatticePoint& q : points) {
            if (q.y < lowest) {
                minimal.push_back(q);
                lowest = q.y;
            } else {
                rest.push_back(q);
            }
        }
        lines.emplace_back(std::move(minimal));
        points = std::move(rest);
    }
    return lines;
}

struct Segment {
    LatticePoint a;
    LatticePoint b;
};

std::vector<Segment> segments(const Shadowline& line) {
    const auto v = line.vertices();
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back({v[i], v[i + 1]});
    return out;
}

// Shared points of two closed axis-parallel segments: nothing, one point, or
// the two ends of a collinear overlap.
void intersect(const Segment& s, const Segment& t, std::vector<LatticePoint>& out) {
    const int sx0 = std::min(s.a.x, s.b.x), sx1 = std::max(s.a.x, s.b.x);
    const int sy0 = std::min(s.a.y, s.b.y), sy1 = std::max(s.a.y, s.b.y);
    const int tx0 = std::min(t.a.x, t.b.x), tx1 = std::max(t.a.x, t.b.x);
    const int ty0 = std::min(t.a.y, t.b.y), ty1 = std::max(t.a.y, t.b.y);
    const int x0 = std::max(sx0, tx0), x1 = std::min(sx1, tx1);
    const int y0 = std::max(sy0, ty0), y1 = std::min(sy1, ty1);
    if (x0 > x1 || y0 > y1) return;
    out.push_back({x0, y0});
    if (x0 != x1 || y0 != y1) out.push_back({x1, y1});
}

Json points_json(const std::vector<LatticePoint>& pts) {
    Json arr = Json::array();
    for (const LatticePoint& q : pts) arr.push_back(Json::array({q.x, q.y}));
    return arr;
}

Json diagram_json(const ShadowDiagram& d) {
    Json j;
    j["iterate"] = d.iterate;
    j["lines"] = Json::array();
    for (const Shadowline& line : d.lines) {
        Json l;
        l["anchors"] = points_json(line.anchors());
        l["vertices"] = points_json(line.vertices());
        l["salient"] = points_json(salient_points(line));
        j["lines"].push_back(std::move(l));
    }
    j["crossings"] = Json::array();
    for (const Crossing& c : crossings(d)) {
        Json cj;
        cj["at"] = Json::array({c.x.numerator(), c.x.denominator(), c.y.numerator(), c.y.denominator()});
        cj["lines"] = Json::array({c.line_a, c.line_b});
        j["crossings"].push_back(std::move(cj));
    }
    return j;
}

constexpr int kCell = 40;
constexpr int kMargin = 30;
constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

int extent(std::span<const ShadowDiagram> iterates) {
    int m = 1;
    for (const ShadowDiagram& d : iterates) {
        for (const Shadowline& line : d.lines) {
            for (const LatticePoint& q : line.anchors()) m = std::max({m, q.x, q.y});
        }
    }
    return m + 1;
}

std::string svg_number(const Coordinate& c) {
    std::ostringstream s;
    s << static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
    return s.str();
}

// One panel with its origin at (ox, oy) in screen space; y grows upward.
void svg_panel(std::ostringstream& out, const ShadowDiagram& d, int size, int ox) {
    const int oy = kMargin + size * kCell;
    auto sx = [&](int x) { return ox + x * kCell; };
    auto sy = [&](int y) { return oy - y * kCell; };
    out << "  <g class=\"iterate\" data-iterate=\"" << d.iterate << "\">\n";
    out << "    <text x=\"" << ox << "\" y=\"" << kMargin - 10 << "\" font-family=\"sans-serif\" font-size=\"14\">D("
        << d.iterate << ")</text>\n";
    out << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(size) << "\" y2=\"" << sy(0)
        << "\" stroke=\"#888\"/>\n";
    out << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(size)
        << "\" stroke=\"#888\"/>\n";
    for (std::size_t i = 0; i < d.lines.size(); ++i) {
        const Shadowline& line = d.lines[i];
        out << "    <polyline class=\"shadowline\" data-line=\"" << i + 1 << "\" fill=\"none\" stroke=\""
            << kPalette[i % kPalette.size()] << "\" stroke-width=\"2\" points=\"";
        const auto v = line.vertices();
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << sx(v[k].x) << ',' << sy(v[k].y);
        out << "\"/>\n";
    }
    for (const Shadowline& line : d.lines) {
        for (const LatticePoint& q : line.anchors()) {
            out << "    <circle class=\"anchor\" cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y) << "\" r=\"5\" fill=\"black\"/>\n";
        }
    }
    for (const Shadowline& line : d.lines) {
        for (const LatticePoint& q : salient_points(line)) {
            out << "    <circle class=\"salient\" cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y)
                << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    for (const Crossing& c : crossings(d)) {
        const std::string cx = svg_number(Coordinate(ox) + c.x * kCell);
        const std::string cy = svg_number(Coordinate(oy) - c.y * kCell);
        out << "    <path class=\"crossing\" transform=\"translate(" << cx << ',' << cy
            << ")\" d=\"M-6,-6 L6,6 M-6,6 L6,-6\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    out << "  </g>\n";
}

std::string render_svg(std::span<const ShadowDiagram> iterates) {
    const int size = extent(iterates);
    const int panel = size * kCell + 2 * kMargin;
    const auto count = static_cast<int>(std::max<std::size_t>(iterates.size(), 1));
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel * count << "\" height=\"" << panel
        << "\" viewBox=\"0 0 " << panel * count << ' ' << panel << "\">\n";
    for (std::size_t i = 0; i < iterates.size(); ++i) {
        svg_panel(out, iterates[i], size, kMargin + static_cast<int>(i) * panel);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

Shadowline::Shadowline(std::vector<LatticePoint> anchors) : anchors_(std::move(anchors)) {
    if (anchors_.empty()) throw MalformedDiagram("a shadowline needs at least one anchor");
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
        if (anchors_[i].x < 1 || anchors_[i].y < 1) throw MalformedDiagram("anchors must have positive coordinates");
        if (i > 0 && (anchors_[i].x <= anchors_[i - 1].x || anchors_[i].y >= anchors_[i - 1].y)) {
            throw MalformedDiagram("anchors must move right and down");
        }
    }
}

std::vector<LatticePoint> Shadowline::vertices() const {
    std::vector<LatticePoint> v;
    v.push_back({0, anchors_.front().y});
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
        v.push_back(anchors_[i]);
        if (i + 1 < anchors_.size()) v.push_back({anchors_[i].x, anchors_[i + 1].y});
    }
    v.push_back({anchors_.back().x, 0});
    return v;
}

int ShadowDiagram::anchor_count() const {
    int total = 0;
    for (const Shadowline& line : lines) total += static_cast<int>(line.anchors().size());
    return total;
}

bool shadow_contains(LatticePoint corner, LatticePoint q) { return q.x <= corner.x && q.y <= corner.y; }

ShadowDiagram shadow_diagram(const Permutation& p) {
    std::vector<LatticePoint> points;
    for (int i = 1; i <= p.size(); ++i) points.push_back({i, p(i)});
    return {0, peel(std::move(points))};
}

std::vector<LatticePoint> salient_points(const Shadowline& line) {
    const auto& a = line.anchors();
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) out.push_back({a[i].x, a[i + 1].y});
    return out;
}

ShadowDiagram iterate(const ShadowDiagram& d) {
    ShadowDiagram next{d.iterate + 1, {}};
    for (const Shadowline& line : d.lines) {
        for (Shadowline& l : peel(salient_points(line))) next.lines.push_back(std::move(l));
    }
    return next;
}

std::vector<ShadowDiagram> exhaustive_iterates(const Permutation& p) {
    std::vector<ShadowDiagram> out;
    for (ShadowDiagram d = shadow_diagram(p); !d.empty(); d = iterate(d)) out.push_back(d);
    return out;
}

std::vector<Crossing> crossings(const ShadowDiagram& d) {
    std::vector<std::vector<Segment>> segs;
    for (const Shadowline& line : d.lines) segs.push_back(segments(line));

    std::vector<std::tuple<int, int, int, int>> found;  // (x, y, a, b)
    std::vector<LatticePoint> shared;
    for (std::size_t a = 0; a < segs.size(); ++a) {
        for (std::size_t b = a + 1; b < segs.size(); ++b) {
            shared.clear();
            for (const Segment& s : segs[a]) {
                for (const Segment& t : segs[b]) intersect(s, t, shared);
            }
            for (const LatticePoint& q : shared) {
                found.emplace_back(q.x, q.y, static_cast<int>(a) + 1, static_cast<int>(b) + 1);
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<Crossing> out;
    out.reserve(found.size());
    for (const auto& [x, y, a, b] : found) out.push_back({Coordinate(x), Coordinate(y), a, b});
    return out;
}

bool iterates_crossing_free(const Permutation& p) {
    for (ShadowDiagram d = shadow_diagram(p); !d.empty(); d = iterate(d)) {
        if (!crossings(d).empty()) return false;
    }
    return true;
}

StablePair piles_from_diagram(const ShadowDiagram& d) {
    if (d.iterate != 0) throw MalformedDiagram("piles come from the 0th iterate only");
    const int n = d.anchor_count();
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    for (const Shadowline& line : d.lines) {
        for (const LatticePoint& q : line.anchors()) {
            if (q.x > n || word[static_cast<std::size_t>(q.x - 1)] != 0) {
                throw MalformedDiagram("anchor abscissae are not exactly 1..n");
            }
            word[static_cast<std::size_t>(q.x - 1)] = q.y;
        }
    }
    Permutation p;
    try {
        p = Permutation(std::move(word));
    } catch (const InvalidPermutation&) {
        throw MalformedDiagram("anchor ordinates are not exactly 1..n");
    }
    if (shadow_diagram(p).lines != d.lines) throw MalformedDiagram("lines are not the shadow diagram of their anchors");

    std::vector<Pile> cards;
    std::vector<Pile> indices;
    for (const Shadowline& line : d.lines) {
        Pile r;
        Pile s;
        for (const LatticePoint& q : line.anchors()) {
            r.push_back(q.y);
            s.push_back(q.x);
        }
        std::reverse(s.begin(), s.end());
        cards.push_back(std::move(r));
        indices.push_back(std::move(s));
    }
    return {PileConfig::from_trusted(std::move(cards), n), PileConfig::from_trusted(std::move(indices), n)};
}

RenderFormat parse_render_format(std::string_view name) {
    if (name == "svg") return RenderFormat::svg;
    if (name == "json") return RenderFormat::json;
    throw UnknownFormat("unknown render format '" + std::string(name) + "' (expected svg or json)");
}

std::string render(const ShadowDiagram& d, RenderFormat format) {
    if (format == RenderFormat::json) return to_json_text(diagram_json(d));
    return render_svg(std::span<const ShadowDiagram>(&d, 1));
}

std::string render(std::span<const ShadowDiagram> iterates, RenderFormat format) {
    if (format == RenderFormat::json) {
        Json arr = Json::array();
        for (const ShadowDiagram& d : iterates) arr.push_back(diagram_json(d));
        return to_json_text(arr);
    }
    return render_svg(iterates);
}

ShadowDiagram diagram_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array()) {
        throw ParseError("diagram JSON needs a \"lines\" array");
    }
    ShadowDiagram d;
    try {
        d.iterate = j.value("iterate", 0);
        for (const Json& l : j["lines"]) {
            std::vector<LatticePoint> anchors;
            for (const Json& q : l.at("anchors")) anchors.push_back({q.at(0).get<int>(), q.at(1).get<int>()});
            d.lines.emplace_back(std::move(anchors));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
    return d;
}

}  // namespace patience
