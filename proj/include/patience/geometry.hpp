#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "patience/patience.hpp"
#include "patience/permutation.hpp"

namespace patience {

// Anchors carry x, y >= 1; polyline vertices may also sit on the axes.
struct LatticePoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Boundary of the union of the southwest shadows of its anchors.
class Shadowline {
public:
    // Anchors must be nonempty, x strictly increasing and y strictly
    // decreasing; throws MalformedDiagram otherwise.
    explicit Shadowline(std::vector<LatticePoint> anchors);

    const std::vector<LatticePoint>& anchors() const noexcept { return anchors_; }

    // (0, y1), (x1, y1), (x1, y2), (x2, y2), ..., (xk, yk), (xk, 0).
    std::vector<LatticePoint> vertices() const;

    friend bool operator==(const Shadowline&, const Shadowline&) = default;

private:
    std::vector<LatticePoint> anchors_;
};

struct ShadowDiagram {
    int iterate = 0;
    std::vector<Shadowline> lines;

    int anchor_count() const;
    bool empty() const noexcept { return lines.empty(); }

    friend bool operator==(const ShadowDiagram&, const ShadowDiagram&) = default;
};

using Coordinate = boost::rational<long long>;

// A point shared by lines line_a < line_b (1-based line numbers).
struct Crossing {
    Coordinate x;
    Coordinate y;
    int line_a = 0;
    int line_b = 0;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// q lies in the closed quarter plane {x <= corner.x, y <= corner.y}.
bool shadow_contains(LatticePoint corner, LatticePoint q);

// Peels product-order-minimal points off the plot {(i, p(i))} one line at a
// time. Line i's ordinates are pile i of patience_sort(p).
ShadowDiagram shadow_diagram(const Permutation& p);

// Southwest corners (x_i, y_{i+1}) between consecutive anchors.
std::vector<LatticePoint> salient_points(const Shadowline& line);

// Next iterate: the salient points of each line are peeled on their own, so
// a new line never joins salient points of two different source lines.
ShadowDiagram iterate(const ShadowDiagram& d);

// D(0), D(1), ... up to the last nonempty iterate.
std::vector<ShadowDiagram> exhaustive_iterates(const Permutation& p);

// Every point shared by two distinct polylines, by exact segment
// intersection. A collinear overlap contributes its two endpoints. Sorted by
// (x, y, line_a, line_b) without duplicates.
std::vector<Crossing> crossings(const ShadowDiagram& d);

// No iterate D(0), D(1), ... of p has a crossing.
bool iterates_crossing_free(const Permutation& p);

// Rebuilds (R, S) from a 0th iterate: ordinates give insertion piles,
// abscissae recording piles. Throws MalformedDiagram if the lines are not the
// shadow diagram of a permutation.
StablePair piles_from_diagram(const ShadowDiagram& d);

enum class RenderFormat { svg, json };

// "svg" or "json"; throws UnknownFormat.
RenderFormat parse_render_format(std::string_view name);

std::string render(const ShadowDiagram& d, RenderFormat format);
std::string render(std::span<const ShadowDiagram> iterates, RenderFormat format);

// Reads the anchors back from the JSON form of a single diagram.
ShadowDiagram diagram_from_json(std::string_view text);

}  // namespace patience
