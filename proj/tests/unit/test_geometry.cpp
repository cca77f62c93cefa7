#include "doctest.h"

#include <map>
#include <set>

#include "../oracles.hpp"
#include "patience/errors.hpp"
#include "patience/geometry.hpp"
#include "patience/patience.hpp"

using namespace patience;

namespace {

using Points = std::vector<LatticePoint>;

std::vector<Points> anchors_of(const ShadowDiagram& d) {
    std::vector<Points> out;
    for (const Shadowline& l : d.lines) out.push_back(l.anchors());
    return out;
}

std::vector<std::pair<int, int>> crossing_points(const ShadowDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (const Crossing& c : crossings(d)) {
        REQUIRE(c.x.denominator() == 1);
        REQUIRE(c.y.denominator() == 1);
        out.emplace_back(static_cast<int>(c.x.numerator()), static_cast<int>(c.y.numerator()));
    }
    return out;
}

const Permutation kWorked = Permutation::parse("64518723");

}  // namespace

TEST_CASE("shadow containment") {
    CHECK(shadow_contains({3, 3}, {1, 2}));
    CHECK(shadow_contains({3, 3}, {3, 3}));
    CHECK_FALSE(shadow_contains({1, 6}, {2, 4}));
}

TEST_CASE("shadowline validation and vertices") {
    const Shadowline l({{1, 6}, {2, 4}, {4, 1}});
    CHECK(l.vertices() == Points{{0, 6}, {1, 6}, {1, 4}, {2, 4}, {2, 1}, {4, 1}, {4, 0}});
    CHECK(Shadowline({{2, 3}}).vertices() == Points{{0, 3}, {2, 3}, {2, 0}});
    CHECK_THROWS_AS(Shadowline(Points{}), MalformedDiagram);
    CHECK_THROWS_AS(Shadowline({{1, 2}, {1, 1}}), MalformedDiagram);
    CHECK_THROWS_AS(Shadowline({{1, 1}, {2, 2}}), MalformedDiagram);
    CHECK_THROWS_AS(Shadowline({{0, 1}}), MalformedDiagram);
}

TEST_CASE("shadow diagram of the worked example") {
    const ShadowDiagram d = shadow_diagram(kWorked);
    CHECK(d.iterate == 0);
    CHECK(anchors_of(d) == std::vector<Points>{{{1, 6}, {2, 4}, {4, 1}}, {{3, 5}, {7, 2}}, {{5, 8}, {6, 7}, {8, 3}}});
    CHECK(d.anchor_count() == 8);
    CHECK(anchors_of(shadow_diagram(Permutation::parse("45312"))) ==
          std::vector<Points>{{{1, 4}, {3, 3}, {4, 1}}, {{2, 5}, {5, 2}}});
    CHECK(anchors_of(shadow_diagram(Permutation::identity(3))) ==
          std::vector<Points>{{{1, 1}}, {{2, 2}}, {{3, 3}}});
    CHECK(shadow_diagram(Permutation{}).empty());
}

TEST_CASE("line ordinates are the piles") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            const ShadowDiagram d = shadow_diagram(Permutation(w));
            const auto piles = oracle::piles(w);
            REQUIRE(d.lines.size() == piles.size());
            for (std::size_t i = 0; i < piles.size(); ++i) {
                std::vector<int> ys;
                for (const LatticePoint& a : d.lines[i].anchors()) ys.push_back(a.y);
                REQUIRE(ys == piles[i]);
            }
        }
    }
}

TEST_CASE("salient points") {
    const ShadowDiagram d = shadow_diagram(kWorked);
    CHECK(salient_points(d.lines[0]) == Points{{1, 4}, {2, 1}});
    CHECK(salient_points(d.lines[1]) == Points{{3, 2}});
    CHECK(salient_points(d.lines[2]) == Points{{5, 7}, {6, 3}});
    CHECK(salient_points(Shadowline({{4, 4}})).empty());
}

TEST_CASE("iterates of the worked example") {
    const auto all = exhaustive_iterates(kWorked);
    REQUIRE(all.size() == 3);
    CHECK(all[1].iterate == 1);
    CHECK(anchors_of(all[1]) == std::vector<Points>{{{1, 4}, {2, 1}}, {{3, 2}}, {{5, 7}, {6, 3}}});
    CHECK(all[2].iterate == 2);
    CHECK(anchors_of(all[2]) == std::vector<Points>{{{1, 1}}, {{5, 3}}});
    CHECK(iterate(all[2]).empty());
    CHECK(iterate(all[0]) == all[1]);
}

TEST_CASE("iterate counts") {
    CHECK(exhaustive_iterates(Permutation::identity(6)).size() == 1);
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> w;
        for (int v = n; v >= 1; --v) w.push_back(v);
        CHECK(exhaustive_iterates(Permutation(w)).size() == static_cast<std::size_t>(n));
    }
    CHECK(exhaustive_iterates(Permutation{}).empty());
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            const auto all = exhaustive_iterates(Permutation(w));
            REQUIRE(all.size() <= static_cast<std::size_t>(n));
            for (std::size_t k = 0; k < all.size(); ++k) {
                REQUIRE(all[k].iterate == static_cast<int>(k));
                REQUIRE_FALSE(all[k].empty());
            }
        }
    }
}

TEST_CASE("crossings of the worked example") {
    const auto all = exhaustive_iterates(kWorked);
    const auto c0 = crossings(all[0]);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].x == Coordinate(1));
    CHECK(c0[0].y == Coordinate(5));
    CHECK(c0[0].line_a == 1);
    CHECK(c0[0].line_b == 2);
    const auto c1 = crossing_points(all[1]);
    CHECK(std::find(c1.begin(), c1.end(), std::pair{1, 2}) != c1.end());
    CHECK(crossings(all[1]).front().line_a == 1);
    CHECK(crossings(all[1]).front().line_b == 2);
    CHECK(crossings(all[2]).empty());
}

TEST_CASE("polygonal crossing") {
    const ShadowDiagram d = shadow_diagram(Permutation::parse("45312"));
    CHECK(crossing_points(d) == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}});
    CHECK(crossings(shadow_diagram(Permutation::identity(5))).empty());
    CHECK(iterates_crossing_free(Permutation::identity(5)));
    CHECK_FALSE(iterates_crossing_free(Permutation::parse("45312")));
}

TEST_CASE("crossings agree with the lattice-point oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            for (const ShadowDiagram& d : exhaustive_iterates(Permutation(w))) {
                std::set<std::tuple<int, int, int, int>> expected;
                std::vector<std::set<oracle::Point>> pts;
                for (const Shadowline& l : d.lines) {
                    std::vector<oracle::Point> vs;
                    for (const LatticePoint& v : l.vertices()) vs.push_back({v.x, v.y});
                    pts.push_back(oracle::lattice_points(vs));
                }
                for (std::size_t a = 0; a < pts.size(); ++a) {
                    for (std::size_t b = a + 1; b < pts.size(); ++b) {
                        for (const oracle::Point& q : pts[a]) {
                            if (pts[b].count(q)) expected.insert({q.x, q.y, int(a) + 1, int(b) + 1});
                        }
                    }
                }
                // Lattice overlaps report every shared lattice point; the
                // library reports the endpoints of each shared segment.
                std::set<std::tuple<int, int, int, int>> got;
                for (const Crossing& c : crossings(d)) {
                    REQUIRE(c.x.denominator() == 1);
                    REQUIRE(c.y.denominator() == 1);
                    got.insert({int(c.x.numerator()), int(c.y.numerator()), c.line_a, c.line_b});
                }
                for (const auto& t : got) REQUIRE(expected.count(t));
                std::set<std::tuple<int, int>> pairs_expected, pairs_got;
                for (const auto& [x, y, a, b] : expected) pairs_expected.insert({a, b});
                for (const auto& [x, y, a, b] : got) pairs_got.insert({a, b});
                REQUIRE(pairs_expected == pairs_got);
            }
        }
    }
}

TEST_CASE("crossings are sorted and unique") {
    for (const auto& w : oracle::all_words(6)) {
        for (const ShadowDiagram& d : exhaustive_iterates(Permutation(w))) {
            const auto c = crossings(d);
            for (std::size_t i = 1; i < c.size(); ++i) {
                const auto key = [](const Crossing& k) { return std::tuple{k.x, k.y, k.line_a, k.line_b}; };
                REQUIRE(key(c[i - 1]) < key(c[i]));
            }
        }
    }
}

TEST_CASE("piles from the diagram") {
    CHECK(piles_from_diagram(shadow_diagram(kWorked)) == extended_patience_sort(kWorked));
    const StablePair id = piles_from_diagram(shadow_diagram(Permutation::identity(4)));
    CHECK(id.insertion == PileConfig({{1}, {2}, {3}, {4}}));
    CHECK(id.recording == PileConfig({{1}, {2}, {3}, {4}}));
    for (int n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            REQUIRE(piles_from_diagram(shadow_diagram(p)) == extended_patience_sort(p));
        }
    }
}

TEST_CASE("piles from a malformed diagram") {
    ShadowDiagram bad;
    bad.lines.push_back(Shadowline({{1, 2}}));
    bad.lines.push_back(Shadowline({{2, 1}}));
    CHECK_THROWS_AS(piles_from_diagram(bad), MalformedDiagram);
    ShadowDiagram gap;
    gap.lines.push_back(Shadowline({{1, 3}}));
    CHECK_THROWS_AS(piles_from_diagram(gap), MalformedDiagram);
    ShadowDiagram later = shadow_diagram(kWorked);
    later.iterate = 1;
    CHECK_THROWS_AS(piles_from_diagram(later), MalformedDiagram);
}

TEST_CASE("render formats") {
    CHECK(parse_render_format("svg") == RenderFormat::svg);
    CHECK(parse_render_format("json") == RenderFormat::json);
    CHECK_THROWS_AS(parse_render_format("png"), UnknownFormat);
    CHECK_THROWS_AS(parse_render_format(""), UnknownFormat);
}

TEST_CASE("json rendering") {
    const std::string text = render(shadow_diagram(Permutation::parse("45312")), RenderFormat::json);
    CHECK(text.find("\"iterate\"") != std::string::npos);
    CHECK(text.find("\"crossings\"") != std::string::npos);
    CHECK(text.find("[2,1,3,1]") != std::string::npos);
    CHECK(text.find("[3,1,2,1]") != std::string::npos);
    for (const ShadowDiagram& d : exhaustive_iterates(kWorked)) {
        const std::string json = render(d, RenderFormat::json);
        CHECK(diagram_from_json(json) == d);
        CHECK(render(d, RenderFormat::json) == json);
    }
    CHECK(diagram_from_json(render(ShadowDiagram{}, RenderFormat::json)).empty());
    CHECK_THROWS_AS(diagram_from_json("{"), ParseError);
    CHECK_THROWS_AS(diagram_from_json(R"({"iterate": 0, "lines": [{"anchors": [[1,1],[2,2]]}]})"), MalformedDiagram);
}

TEST_CASE("svg rendering") {
    const auto all = exhaustive_iterates(kWorked);
    const std::string svg = render(all, RenderFormat::svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t polylines = 0;
    for (auto at = svg.find("<polyline"); at != std::string::npos; at = svg.find("<polyline", at + 1)) ++polylines;
    CHECK(polylines == 3 + 3 + 2);
    CHECK(svg == render(all, RenderFormat::svg));
}
