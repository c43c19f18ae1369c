#pragma once

#include "g2web/planar_map.hpp"
#include "g2web/weights.hpp"

#include <cstdint>
#include <vector>

namespace g2web {

enum class ArcKind : std::uint8_t { cross, ride };

struct CutArc {
    int from = 0;
    int to = 0;
    Weight cost;
    ArcKind kind = ArcKind::cross;
    int edge_dart = -1;  // smaller dart of the edge crossed or ridden
};

/// Faces of a diagram joined by the moves a cut path can make. Arcs are
/// undirected; each is stored once.
struct CutSearchGraph {
    int face_count = 0;
    std::vector<CutArc> arcs;
    std::vector<std::vector<int>> incident;  // arc ids per face
    std::vector<int> face_of_slot;
};

/// Cross arcs: one per edge between distinct faces, costing (0,1) for an
/// ordinary edge and (1,0) for a double edge. Ride arcs: for an ordinary edge
/// whose ends are both internal vertices, one arc of cost (1,0) between every
/// face at one end and every face at the other. At an end that meets a double
/// edge only the two faces beside the ridden edge count.
CutSearchGraph build_search_graph(const Diagram& d);

struct CutResult {
    Weight weight;
    std::uint64_t multiplicity = 0;  // saturates at UINT64_MAX
};

/// Minimal cut weights from the interval holding `from_slot` to every face.
class CutDistances {
public:
    CutDistances(const CutSearchGraph& g, int from_slot);
    CutResult to_slot(int slot) const;

private:
    const CutSearchGraph* graph_;
    std::vector<Weight> dist_;
    std::vector<std::uint64_t> count_;
};

/// Slots must be gaps.
Weight min_cut_weight(const Diagram& d, int from_gap, int to_gap);
std::uint64_t min_cut_multiplicity(const Diagram& d, int from_gap, int to_gap);

/// Minimal cut weights from A to X, X_1, ..., X_n = Y, where X_i is the
/// interval just after the i-th top mark.
std::vector<Weight> weight_profile(const TriangularDiagram& td);

} // namespace g2web
