#pragma once

#include "g2web/planar_map.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace fixtures {

using g2web::Diagram;
using g2web::EdgeKind;
using g2web::Sketch;

// Boundary marks are always added clockwise: angles decrease.
inline Diagram arc() {
    Sketch s;
    s.gap();
    int m0 = s.mark(-1, 0);
    s.gap();
    int m1 = s.mark(1, 0);
    s.edge(m0, m1);
    return s.build();
}

// Four marks at the corners, clockwise from top-left. `rotated` pairs the
// marks (1,2),(3,0) instead of (0,1),(2,3).
inline Diagram two_arcs(bool rotated) {
    Sketch s;
    int m[4];
    const double xy[4][2] = {{-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
    for (int i = 0; i < 4; ++i) {
        s.gap();
        m[i] = s.mark(xy[i][0], xy[i][1]);
    }
    if (rotated) {
        s.edge(m[1], m[2]);
        s.edge(m[3], m[0]);
    } else {
        s.edge(m[0], m[1]);
        s.edge(m[2], m[3]);
    }
    return s.build();
}

// H with a horizontal bridge when `rotated`, else a vertical bridge.
inline Diagram h_shape(bool rotated) {
    Sketch s;
    int m[4];
    const double xy[4][2] = {{-2, 2}, {2, 2}, {2, -2}, {-2, -2}};
    for (int i = 0; i < 4; ++i) {
        s.gap();
        m[i] = s.mark(xy[i][0], xy[i][1]);
    }
    if (rotated) {
        int l = s.vertex(-1, 0), r = s.vertex(1, 0);
        s.edge(m[0], l);
        s.edge(m[3], l);
        s.edge(m[1], r);
        s.edge(m[2], r);
        s.edge(l, r);
    } else {
        int u = s.vertex(0, 1), v = s.vertex(0, -1);
        s.edge(m[0], u);
        s.edge(m[1], u);
        s.edge(m[2], v);
        s.edge(m[3], v);
        s.edge(u, v);
    }
    return s.build();
}

// A hexagon with one leg per corner.
inline Diagram hexagon() {
    Sketch s;
    const double pi = std::acos(-1.0);
    int v[6], m[6];
    for (int i = 0; i < 6; ++i) {
        double t = -pi * i / 3;
        s.gap();
        m[i] = s.mark(3 * std::cos(t), 3 * std::sin(t));
        v[i] = s.vertex(std::cos(t), std::sin(t));
    }
    for (int i = 0; i < 6; ++i) {
        s.edge(m[i], v[i]);
        s.edge(v[i], v[(i + 1) % 6]);
    }
    return s.build();
}

// Two vertical rails joined by `rungs` horizontal rungs.
inline Diagram ladder(int rungs) {
    Sketch s;
    s.gap();
    int tl = s.mark(-1, 10);
    s.gap();
    int tr = s.mark(1, 10);
    s.gap();
    int br = s.mark(1, -10);
    s.gap();
    int bl = s.mark(-1, -10);
    int pl = tl, pr = tr;
    for (int i = 0; i < rungs; ++i) {
        double y = 5 - 2.0 * i;
        int l = s.vertex(-1, y), r = s.vertex(1, y);
        s.edge(pl, l);
        s.edge(pr, r);
        s.edge(l, r);
        pl = l;
        pr = r;
    }
    s.edge(pl, bl);
    s.edge(pr, br);
    return s.build();
}

// Two legs meeting a 2-gon: the two sides of the eye are parallel routes.
inline Diagram eye() {
    Sketch s;
    s.gap();
    int top = s.mark(0, 3);
    s.gap();
    int bottom = s.mark(0, -3);
    int u = s.vertex(0, 1), v = s.vertex(0, -1);
    s.edge(top, u);
    s.edge(v, bottom);
    s.edge(u, v, EdgeKind::ordinary, {{-1, 0}});
    s.edge(u, v, EdgeKind::ordinary, {{1, 0}});
    return s.build();
}

// A tree with a four-vertex spine and legs on alternating sides. With corners
// (0, 6, 8) it reads as one letter but its sides are not unique minimal cut
// paths: the pattern that pruning reduces.
inline Diagram caterpillar() {
    Sketch s;
    std::vector<int> m;
    const double xy[6][2] = {{-4, 2}, {-1, 3}, {4, 2}, {4, -2}, {1, -3}, {-4, -2}};
    for (const auto& p : xy) {
        s.gap();
        m.push_back(s.mark(p[0], p[1]));
    }
    int v3 = s.vertex(-3, 0), v2 = s.vertex(-1, 0), v1 = s.vertex(1, 0), v0 = s.vertex(3, 0);
    s.edge(m[0], v3);
    s.edge(m[5], v3);
    s.edge(m[1], v2);
    s.edge(m[4], v1);
    s.edge(m[2], v0);
    s.edge(m[3], v0);
    s.edge(v3, v2);
    s.edge(v2, v1);
    s.edge(v1, v0);
    return s.build();
}

// Same diagram with darts renumbered by a random permutation.
inline Diagram permuted(const Diagram& d, std::uint64_t seed) {
    std::vector<int> p(static_cast<std::size_t>(d.dart_count()));
    std::iota(p.begin(), p.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    auto map = [&](int x) { return p[static_cast<std::size_t>(x)]; };
    std::vector<int> alpha(p.size());
    std::vector<EdgeKind> kinds(p.size());
    for (int x = 0; x < d.dart_count(); ++x) {
        alpha[static_cast<std::size_t>(map(x))] = map(d.alpha(x));
        kinds[static_cast<std::size_t>(map(x))] = d.kind(x);
    }
    std::vector<std::vector<int>> verts;
    for (const auto& rot : d.vertices()) {
        std::vector<int> r;
        for (int x : rot) r.push_back(map(x));
        std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
        verts.push_back(std::move(r));
    }
    std::shuffle(verts.begin(), verts.end(), rng);
    auto slots = d.slots();
    for (auto& s : slots)
        if (s.is_mark) s.dart = map(s.dart);
    return Diagram(std::move(verts), std::move(alpha), std::move(kinds), std::move(slots), d.corners());
}

} // namespace fixtures
