#pragma once

#include "g2web/planar_map.hpp"
#include "g2web/weights.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2web {

/// Interface labels: the weights that can sit on a grid edge.
inline constexpr std::array<Weight, 4> kLabelSet = {Weight{0, 0}, Weight{0, 1}, Weight{0, 2}, Weight{1, 0}};

bool in_label_set(Weight w);

/// Strands crossing an edge with this label, in order along the edge.
/// Throws std::invalid_argument outside the label set.
std::vector<EdgeKind> signature(Weight label);

struct TriangleLabels {
    Weight d;  // lower-left side
    Weight h;  // lower-right side
};

TriangleLabels triangle_labels(Step s);

struct DiamondLabels {
    Weight bottom_left;
    Weight bottom_right;
};

/// (max(beta - alpha, 0), max(alpha - beta, 0)) componentwise.
DiamondLabels diamond_outputs(Weight alpha, Weight beta);

enum class TileKind { triangle, diamond };

/// A tile as a small diagram whose boundary marks are the strand ends on its
/// sides. Triangles have corners (A, X, Y) and sides left, top, right.
/// Diamonds have corners (bottom, left, top, right) and sides bottom-left,
/// top-left, top-right, bottom-right. Marks run clockwise as usual.
struct TileTemplate {
    TileKind kind = TileKind::triangle;
    Step step = Step::z;     // triangles
    Weight alpha, beta;      // diamonds: top-left, top-right
    std::vector<Weight> side_labels;  // clockwise from the bottom corner
    Diagram fragment;

    /// Marked slots on side k, in clockwise order.
    std::vector<int> side_slots(int side) const;
};

TileTemplate triangle_template(Step s);

/// Throws std::invalid_argument when alpha or beta is outside the label set.
TileTemplate diamond_template(Weight alpha, Weight beta);

/// Edge labels of the triangular grid for a word of length n. Cell (i, j) with
/// i + j <= n - 1 owns the edge to (i, j + 1), labelled D, and the edge to
/// (i + 1, j), labelled H. Letter k sits on the cell (k - 1, n - k).
class GridLabels {
public:
    explicit GridLabels(int n) : n_(n) {}
    int length() const { return n_; }
    Weight d(int i, int j) const { return d_.at({i, j}); }
    Weight h(int i, int j) const { return h_.at({i, j}); }
    void set(int i, int j, Weight d, Weight h) {
        d_[{i, j}] = d;
        h_[{i, j}] = h;
    }
    /// All stored labels, D then H.
    std::vector<Weight> all() const;

private:
    int n_;
    std::map<std::pair<int, int>, Weight> d_, h_;
};

GridLabels grid_labels(const Word& w);

class SignatureMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Glues the tiles of a word into one triangular diagram, possibly with double
/// edges. Outer sides carry one gap between consecutive marks; the top side
/// has the gaps X = X_0, X_1, ..., X_n = Y.
TriangularDiagram assemble(const Word& w);

class DanglingDouble : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Replaces every double edge by an H and then removes surplus ladder rungs:
/// while an internal square has two opposite rungs introduced here, one of
/// them is deleted and its ends are smoothed. A double edge ending on the
/// boundary splits its mark in two. Corners are kept.
Diagram resolve_doubles(const Diagram& d);
TriangularDiagram resolve_doubles(const TriangularDiagram& td);

} // namespace g2web
