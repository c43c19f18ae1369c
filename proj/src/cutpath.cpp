#include "g2web/cutpath.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace g2web {

CutSearchGraph build_search_graph(const Diagram& d) {
    CutSearchGraph g;
    auto fs = faces(d);
    g.face_count = static_cast<int>(fs.faces.size());
    g.incident.assign(static_cast<std::size_t>(g.face_count), {});
    g.face_of_slot = fs.face_of_slot;
    auto face = [&](int x) { return fs.face_of_dart[static_cast<std::size_t>(x)]; };
    auto add = [&](int p, int q, Weight cost, ArcKind kind, int dart) {
        g.incident[static_cast<std::size_t>(p)].push_back(static_cast<int>(g.arcs.size()));
        if (q != p) g.incident[static_cast<std::size_t>(q)].push_back(static_cast<int>(g.arcs.size()));
        g.arcs.push_back({p, q, cost, kind, dart});
    };

    for (int x = 0; x < d.dart_count(); ++x) {
        const int y = d.alpha(x);
        if (x > y) continue;
        // The two sides of edge x-y are the faces of x and y.
        const int fx = face(x), fy = face(y);
        if (fx != fy) add(fx, fy, d.kind(x) == EdgeKind::doubled ? Weight{1, 0} : Weight{0, 1}, ArcKind::cross, x);

        if (d.kind(x) != EdgeKind::ordinary || d.is_boundary_dart(x) || d.is_boundary_dart(y)) continue;
        // At a vertex meeting a double edge the path can only leave from the
        // two faces beside the ridden edge; the double edge stands for a rung
        // that separates the third face from this end.
        auto faces_at = [&](int end) {
            std::set<int> out;
            const auto& rot = d.vertex(d.vertex_of(end));
            const bool mixed = std::any_of(rot.begin(), rot.end(), [&](int z) { return d.kind(z) == EdgeKind::doubled; });
            if (mixed) {
                out = {face(x), face(y)};
            } else {
                for (int z : rot) out.insert(face(z));
            }
            return out;
        };
        const std::set<int> at_u = faces_at(x), at_v = faces_at(y);
        std::set<std::pair<int, int>> done;
        for (int p : at_u)
            for (int q : at_v) {
                if (p == q) continue;
                auto key = std::minmax(p, q);
                if (done.insert(key).second) add(key.first, key.second, {1, 0}, ArcKind::ride, x);
            }
    }
    return g;
}

CutDistances::CutDistances(const CutSearchGraph& g, int from_slot) : graph_(&g) {
    if (from_slot < 0 || from_slot >= static_cast<int>(g.face_of_slot.size())) throw std::out_of_range("no such slot");
    const auto n = static_cast<std::size_t>(g.face_count);
    dist_.assign(n, Weight{std::numeric_limits<int>::max() / 4, 0});
    count_.assign(n, 0);
    std::vector<char> settled(n, 0);

    struct Item {
        Weight w;
        int face;
        bool operator>(const Item& o) const {
            auto c = cut_order_cmp(w, o.w);
            return c > 0 || (c == 0 && face > o.face);
        }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    const int src = g.face_of_slot[static_cast<std::size_t>(from_slot)];
    dist_[static_cast<std::size_t>(src)] = {0, 0};
    count_[static_cast<std::size_t>(src)] = 1;
    pq.push({{0, 0}, src});
    while (!pq.empty()) {
        Item it = pq.top();
        pq.pop();
        const auto f = static_cast<std::size_t>(it.face);
        if (settled[f] || it.w != dist_[f]) continue;
        settled[f] = 1;
        for (int ai : g.incident[f]) {
            const CutArc& arc = g.arcs[static_cast<std::size_t>(ai)];
            const int other = arc.from == it.face ? arc.to : arc.from;
            const auto o = static_cast<std::size_t>(other);
            if (settled[o]) continue;
            const Weight cand = it.w + arc.cost;
            auto c = cut_order_cmp(cand, dist_[o]);
            if (c < 0) {
                dist_[o] = cand;
                count_[o] = count_[f];
                pq.push({cand, other});
            } else if (c == 0) {
                count_[o] = count_[o] > std::numeric_limits<std::uint64_t>::max() - count_[f]
                                ? std::numeric_limits<std::uint64_t>::max()
                                : count_[o] + count_[f];
            }
        }
    }
}

CutResult CutDistances::to_slot(int slot) const {
    const auto f = static_cast<std::size_t>(graph_->face_of_slot.at(static_cast<std::size_t>(slot)));
    return {dist_[f], count_[f]};
}

namespace {

void require_gap(const Diagram& d, int slot) {
    if (slot < 0 || slot >= d.slot_count()) throw std::out_of_range("slot " + std::to_string(slot) + " out of range");
    if (d.slot(slot).is_mark) throw std::invalid_argument("slot " + std::to_string(slot) + " is a marked point");
}

} // namespace

Weight min_cut_weight(const Diagram& d, int from_gap, int to_gap) {
    require_gap(d, from_gap);
    require_gap(d, to_gap);
    auto g = build_search_graph(d);
    return CutDistances(g, from_gap).to_slot(to_gap).weight;
}

std::uint64_t min_cut_multiplicity(const Diagram& d, int from_gap, int to_gap) {
    require_gap(d, from_gap);
    require_gap(d, to_gap);
    auto g = build_search_graph(d);
    return CutDistances(g, from_gap).to_slot(to_gap).multiplicity;
}

std::vector<Weight> weight_profile(const TriangularDiagram& td) {
    auto g = build_search_graph(td.diagram);
    CutDistances from_a(g, td.corner_a());
    std::vector<Weight> out{from_a.to_slot(td.corner_x()).weight};
    // The face of a mark's slot is the face of the interval just after it.
    for (int s : td.top_marks()) out.push_back(from_a.to_slot(s).weight);
    return out;
}

} // namespace g2web
