#pragma once

// The seven length-one triangular diagrams drawn without double edges,
// in the layout produced by the assembler: corner A at (0,-8), X at (-12,4),
// Y at (12,4); the left side is x + y = -8 and the right side x - y = 8.

#include "g2web/planar_map.hpp"
#include "g2web/weights.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace figures {

using Seg = std::array<int, 4>;
using P = std::pair<int, int>;

inline g2web::Diagram triangle(const std::vector<Seg>& segs) {
    std::map<P, std::vector<P>> adj;
    for (const auto& s : segs) {
        adj[{s[0], s[1]}].push_back({s[2], s[3]});
        adj[{s[2], s[3]}].push_back({s[0], s[1]});
    }
    auto on_left = [](P p) { return p.first + p.second == -8; };
    auto on_right = [](P p) { return p.first - p.second == 8; };
    auto on_top = [](P p) { return p.second == 4; };
    auto on_boundary = [&](P p) { return on_left(p) || on_right(p) || on_top(p); };

    std::vector<P> left, top, right;
    for (const auto& [p, nb] : adj) {
        if (on_left(p)) left.push_back(p);
        else if (on_top(p)) top.push_back(p);
        else if (on_right(p)) right.push_back(p);
        else if (nb.size() == 1) throw std::logic_error("loose end inside the triangle");
    }
    std::sort(left.begin(), left.end(), [](P a, P b) { return a.second < b.second; });
    std::sort(top.begin(), top.end());
    std::sort(right.begin(), right.end(), [](P a, P b) { return a.second > b.second; });

    g2web::Sketch sk;
    std::map<P, int> node;
    auto side = [&](const std::vector<P>& marks) {
        for (std::size_t i = 0; i < marks.size(); ++i) {
            if (i > 0) sk.gap();
            node[marks[i]] = sk.mark(marks[i].first, marks[i].second);
        }
    };
    const int a = sk.gap();
    side(left);
    const int x = sk.gap();
    for (auto p : top) node[p] = sk.mark(p.first, p.second);
    const int y = sk.gap();
    side(right);
    for (const auto& [p, nb] : adj)
        if (!on_boundary(p) && nb.size() != 2) node[p] = sk.vertex(p.first, p.second);

    // Chains through degree-two points become single bent edges.
    std::map<std::pair<P, P>, bool> used;
    for (const auto& [start, nb] : adj) {
        if (!node.count(start)) continue;
        for (P next : nb) {
            if (used[{start, next}]) continue;
            P prev = start, cur = next;
            std::vector<g2web::Sketch::Point> bends;
            used[{prev, cur}] = true;
            while (!node.count(cur)) {
                bends.push_back({double(cur.first), double(cur.second)});
                const auto& cn = adj[cur];
                P nxt = cn[0] == prev ? cn[1] : cn[0];
                prev = cur;
                cur = nxt;
                used[{prev, cur}] = true;
            }
            used[{cur, prev}] = true;
            sk.edge(node[start], node[cur], g2web::EdgeKind::ordinary, bends);
        }
    }
    return sk.build({a, x, y});
}

inline g2web::Diagram letter(g2web::Step s) {
    using g2web::Step;
    switch (s) {
    case Step::a:
        return triangle({{0, 4, 0, 0}, {0, 0, 6, -2}});
    case Step::A:
        return triangle({{0, 4, 0, 0}, {0, 0, -6, -2}});
    case Step::z:
        return triangle({{0, 4, 0, 0}, {0, 0, -6, -2}, {0, 0, 6, -2}});
    case Step::b:
        return triangle({{6, 4, 6, 2}, {0, 0, 6, 2}, {0, 0, 0, -4}, {-3, -5, 0, -4}, {6, 2, 9, 1}, {0, -4, 3, -5}});
    case Step::B:
        return triangle({{-6, 4, -6, 2}, {0, 0, -6, 2}, {0, 0, 0, -4}, {3, -5, 0, -4}, {-6, 2, -9, 1}, {0, -4, -3, -5}});
    case Step::C:
        return triangle({{-6, 4, -6, 2}, {-9, 1, -6, 2}, {-6, 2, 0, 0}, {0, 0, 6, 2}, {6, 2, 9, 1}, {0, 0, 0, -4},
                         {0, -4, 3, -5}, {0, -4, -3, -5}});
    case Step::c:
        return triangle({{6, 4, 6, 2}, {-9, 1, -6, 2}, {-6, 2, 0, 0}, {0, 0, 6, 2}, {6, 2, 9, 1}, {0, 0, 0, -4},
                         {0, -4, 3, -5}, {0, -4, -3, -5}});
    }
    throw std::logic_error("unknown step");
}

} // namespace figures
