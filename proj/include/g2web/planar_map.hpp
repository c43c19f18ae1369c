#pragma once

#include "g2web/weights.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2web {

enum class EdgeKind : std::uint8_t { ordinary, doubled };

std::string_view to_string(EdgeKind k);

/// A position on the boundary circle: either a marked point carrying the end
/// of an edge, or an unmarked gap that cut paths may start or end at.
struct Slot {
    bool is_mark = false;
    int dart = -1;  // boundary dart when is_mark

    static Slot gap() { return {false, -1}; }
    static Slot mark(int d) { return {true, d}; }
    bool operator==(const Slot&) const = default;
};

class MalformedMap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph embedded in a disc, stored as a combinatorial map.
///
/// Every edge has two darts paired by alpha. A dart is attached either to an
/// internal vertex, whose darts are listed counterclockwise, or to a marked
/// boundary slot. The boundary slots are listed clockwise around the disc,
/// which is the counterclockwise rotation at the collapsed boundary when the
/// disc is viewed as a sphere. Faces are the orbits of sigma(alpha(d)).
///
/// Instances are immutable; editing operations return new values.
class Diagram {
public:
    /// The empty disc: one gap, no darts.
    Diagram();

    /// Validates dart ownership and the involution. Degree and planarity are
    /// checked separately by validate().
    Diagram(std::vector<std::vector<int>> vertices, std::vector<int> alpha, std::vector<EdgeKind> kinds,
            std::vector<Slot> slots, std::vector<int> corners = {});

    int dart_count() const { return static_cast<int>(alpha_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int mark_count() const { return mark_count_; }
    int slot_count() const { return static_cast<int>(slots_.size()); }

    int alpha(int d) const { return alpha_[static_cast<std::size_t>(d)]; }
    EdgeKind kind(int d) const { return kinds_[static_cast<std::size_t>(d)]; }
    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<EdgeKind>& kinds() const { return kinds_; }
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<int>& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const std::vector<Slot>& slots() const { return slots_; }
    const Slot& slot(int s) const { return slots_[static_cast<std::size_t>(s)]; }

    /// Corner gaps: empty, three (A, X, Y) for triangular diagrams, or four
    /// (bottom, left, top, right) for diamond tiles.
    const std::vector<int>& corners() const { return corners_; }
    Diagram with_corners(std::vector<int> corners) const;
    Diagram without_corners() const { return with_corners({}); }

    /// Vertex owning d, or -1 for a boundary dart.
    int vertex_of(int d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
    /// Slot holding d, or -1 when d sits at an internal vertex.
    int slot_of(int d) const { return slot_of_[static_cast<std::size_t>(d)]; }
    bool is_boundary_dart(int d) const { return slot_of(d) >= 0; }

    /// Next dart counterclockwise around the owner of d.
    int sigma(int d) const;
    /// Face successor: sigma(alpha(d)).
    int face_next(int d) const { return sigma(alpha(d)); }

    /// Boundary darts in slot order.
    std::vector<int> boundary_darts() const;

    int count_kind(EdgeKind k) const;

    bool operator==(const Diagram& o) const = default;

private:
    std::vector<std::vector<int>> vertices_;
    std::vector<int> alpha_;
    std::vector<EdgeKind> kinds_;
    std::vector<Slot> slots_;
    std::vector<int> corners_;

    std::vector<int> vertex_of_;
    std::vector<int> pos_in_vertex_;
    std::vector<int> slot_of_;
    std::vector<int> next_boundary_;
    int mark_count_ = 0;
};

/// A diagram with three distinguished corner gaps A, X, Y. The top side runs
/// clockwise from X to Y; its marks are the letters of the word.
struct TriangularDiagram {
    Diagram diagram;

    int corner_a() const { return diagram.corners().at(0); }
    int corner_x() const { return diagram.corners().at(1); }
    int corner_y() const { return diagram.corners().at(2); }

    /// Slots of the marks on the top side, in order from X to Y.
    std::vector<int> top_marks() const;
    int length() const { return static_cast<int>(top_marks().size()); }
};

struct Face {
    std::vector<int> darts;  // cyclic, each dart is one edge-side
    bool touches_boundary = false;
    int degree() const { return static_cast<int>(darts.size()); }
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> face_of_dart;
    /// Face of the boundary interval that contains slot s (for a mark, the
    /// interval just after it).
    std::vector<int> face_of_slot;
};

FaceSet faces(const Diagram& d);

/// Every internal face has at least six edge-sides.
bool is_nonpositive(const Diagram& d);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Structural checks: degree three at internal vertices with three ordinary
/// edges or two ordinary and one double; no component detached from the
/// boundary; Euler characteristic of a disc.
ValidationReport validate(const Diagram& d, bool allow_double = true);
bool is_trivalent(const Diagram& d, bool allow_double = true);
bool is_planar_disc(const Diagram& d);

/// Upper bound on internal vertices: count <= n^2 / (pi sqrt 3).
bool isoperimetric_check(const Diagram& d, int boundary_points);
bool isoperimetric_check(const Diagram& d);
/// Largest vertex count allowed for n boundary points.
int isoperimetric_vertex_bound(int boundary_points);

/// Relabels darts and vertices by a traversal anchored at slot 0.
Diagram canonical_form(const Diagram& d);

/// Serialisation of canonical_form(d); equal iff isotopic rel boundary.
std::string canonical_encoding(const Diagram& d);

/// Rebuilds the boundary as gap, mark, gap, mark, ... with exactly one gap per
/// interval, starting with the interval that holds slot `anchor`. Corners are
/// dropped.
Diagram normalized_disc(const Diagram& d, int anchor = 0);

class DegreeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Removes a degree-two vertex whose edges are both ordinary, joining them.
Diagram smooth_valence2(const Diagram& d, int vertex);

struct ParseError : public std::runtime_error {
    ParseError(int line, int column, const std::string& what);
    int line;
    int column;
};

/// Line-based text format:
///   g2web 1
///   boundary <k>
///   slots <gap|mark:<dart>> ...
///   vertex <darts ccw>
///   edge <dart> <dart> <ordinary|double>
///   corners <slot> <slot> <slot> [<slot>]
std::string serialize(const Diagram& d);
Diagram parse_diagram(std::string_view text);

Diagram read_diagram_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Builds a diagram from a drawing. Rotations at internal vertices are read
/// off the angles of the incident edges (y up), using the first bend of a
/// polyline edge when it has one. Boundary marks and gaps are listed in the
/// order they are added, which must be clockwise.
class Sketch {
public:
    struct Point {
        double x = 0;
        double y = 0;
    };

    int vertex(double x, double y);
    int mark(double x, double y);
    /// Adds a gap slot and returns its slot index.
    int gap();
    void edge(int p, int q, EdgeKind kind = EdgeKind::ordinary, std::vector<Point> bends = {});

    Diagram build(std::vector<int> corners = {}) const;

private:
    struct Node {
        Point at;
        bool boundary = false;
        std::vector<std::pair<double, int>> darts;  // (angle, dart)
    };
    struct Edge {
        int p, q;
        EdgeKind kind;
        std::vector<Point> bends;
    };
    std::vector<Node> nodes_;
    std::vector<int> slot_nodes_;  // -1 for gaps
    std::vector<Edge> edges_;
};

/// Non-normative drawing: boundary marks on a circle, internal vertices by
/// barycentric relaxation.
std::string render_svg(const Diagram& d);

} // namespace g2web
