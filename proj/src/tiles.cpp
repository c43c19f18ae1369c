#include "g2web/tiles.hpp"

#include <algorithm>
#include <optional>

namespace g2web {

bool in_label_set(Weight w) { return std::find(kLabelSet.begin(), kLabelSet.end(), w) != kLabelSet.end(); }

std::vector<EdgeKind> signature(Weight label) {
    if (label == Weight{0, 0}) return {};
    if (label == Weight{0, 1}) return {EdgeKind::ordinary};
    if (label == Weight{0, 2}) return {EdgeKind::ordinary, EdgeKind::ordinary};
    if (label == Weight{1, 0}) return {EdgeKind::doubled};
    throw std::invalid_argument("label " + to_string(label) + " is outside the label set");
}

TriangleLabels triangle_labels(Step s) {
    switch (s) {
    case Step::a: return {{0, 0}, {0, 1}};
    case Step::A: return {{0, 1}, {0, 0}};
    case Step::z: return {{0, 1}, {0, 1}};
    case Step::b: return {{0, 1}, {1, 0}};
    case Step::B: return {{1, 0}, {0, 1}};
    case Step::C: return {{0, 2}, {1, 0}};
    case Step::c: return {{1, 0}, {0, 2}};
    }
    throw std::invalid_argument("unknown step");
}

DiamondLabels diamond_outputs(Weight alpha, Weight beta) {
    return {clamp_nonneg(beta - alpha), clamp_nonneg(alpha - beta)};
}

std::vector<Weight> GridLabels::all() const {
    std::vector<Weight> out;
    for (auto& [k, w] : d_) out.push_back(w);
    for (auto& [k, w] : h_) out.push_back(w);
    return out;
}

GridLabels grid_labels(const Word& w) {
    const int n = static_cast<int>(w.size());
    GridLabels g(n);
    for (int k = 1; k <= n; ++k) {
        auto t = triangle_labels(w[static_cast<std::size_t>(k - 1)]);
        g.set(k - 1, n - k, t.d, t.h);
    }
    // Row i + j = r is filled from the row above it.
    for (int r = n - 2; r >= 0; --r)
        for (int i = 0; i <= r; ++i) {
            const int j = r - i;
            auto out = diamond_outputs(g.h(i, j + 1), g.d(i + 1, j));
            g.set(i, j, out.bottom_left, out.bottom_right);
        }
    return g;
}

namespace {

// A tile as drawn: points, each internal or on one side, and edges between them.
struct Drawing {
    struct Pt {
        double x, y;
        int side;  // -1 for an internal point
    };
    struct Seg {
        int p, q;
        EdgeKind kind;
        std::vector<Sketch::Point> bends;
    };
    std::vector<Pt> pts;
    std::vector<Seg> segs;

    int at(double x, double y, int side = -1) {
        pts.push_back({x, y, side});
        return static_cast<int>(pts.size()) - 1;
    }
    void join(int p, int q, EdgeKind k = EdgeKind::ordinary, std::vector<Sketch::Point> bends = {}) {
        segs.push_back({p, q, k, std::move(bends)});
    }
    void join2(int p, int q) { join(p, q, EdgeKind::doubled); }

    // Reflection in the vertical axis; `side_map` sends each side to its image.
    Drawing mirrored(const std::vector<int>& side_map) const {
        Drawing m = *this;
        for (auto& p : m.pts) {
            p.x = -p.x;
            if (p.side >= 0) p.side = side_map[static_cast<std::size_t>(p.side)];
        }
        for (auto& s : m.segs)
            for (auto& b : s.bends) b.x = -b.x;
        return m;
    }
};

constexpr int kLeft = 0, kTop = 1, kRight = 2;            // triangle sides
constexpr int kBL = 0, kTL = 1, kTR = 2, kBR = 3;          // diamond sides

// Clockwise boundary: a corner gap, then the ports of side 0 sorted along the
// side, and so on. order_key[k] is 0 when side k runs upwards, 1 when it runs
// downwards and 2 for left to right.
Diagram build_tile(const Drawing& dr, int sides, const std::vector<int>& order_key) {
    Sketch sk;
    std::vector<int> node(dr.pts.size(), -1);
    std::vector<int> corners;
    for (int side = 0; side < sides; ++side) {
        corners.push_back(sk.gap());
        std::vector<int> ports;
        for (std::size_t i = 0; i < dr.pts.size(); ++i)
            if (dr.pts[i].side == side) ports.push_back(static_cast<int>(i));
        const int key = order_key[static_cast<std::size_t>(side)];
        std::sort(ports.begin(), ports.end(), [&](int p, int q) {
            const auto& a = dr.pts[static_cast<std::size_t>(p)];
            const auto& b = dr.pts[static_cast<std::size_t>(q)];
            switch (key) {
            case 0: return a.y < b.y;   // upwards
            case 1: return a.y > b.y;   // downwards
            default: return a.x < b.x;  // left to right
            }
        });
        for (int p : ports) node[static_cast<std::size_t>(p)] = sk.mark(dr.pts[static_cast<std::size_t>(p)].x, dr.pts[static_cast<std::size_t>(p)].y);
    }
    for (std::size_t i = 0; i < dr.pts.size(); ++i)
        if (dr.pts[i].side < 0) node[i] = sk.vertex(dr.pts[i].x, dr.pts[i].y);
    for (const auto& s : dr.segs) sk.edge(node[static_cast<std::size_t>(s.p)], node[static_cast<std::size_t>(s.q)], s.kind, s.bends);
    return sk.build(corners);
}

// Triangle corners: A (0,-8), X (-12,4), Y (12,4). Drawn for the steps
// a, A, z, b, B, C; c is the mirror image of C.
Drawing triangle_drawing(Step s) {
    Drawing d;
    switch (s) {
    case Step::a: {
        int t = d.at(0, 4, kTop), r = d.at(6, -2, kRight);
        d.join(t, r, EdgeKind::ordinary, {{0, 0}});
        break;
    }
    case Step::A: {
        int t = d.at(0, 4, kTop), l = d.at(-6, -2, kLeft);
        d.join(t, l, EdgeKind::ordinary, {{0, 0}});
        break;
    }
    case Step::z:
    case Step::b:
    case Step::B: {
        int t = d.at(0, 4, kTop), l = d.at(-6, -2, kLeft), r = d.at(6, -2, kRight), v = d.at(0, 0);
        d.join(t, v);
        d.join(v, l, s == Step::B ? EdgeKind::doubled : EdgeKind::ordinary);
        d.join(v, r, s == Step::b ? EdgeKind::doubled : EdgeKind::ordinary);
        break;
    }
    case Step::C: {
        int t = d.at(-6, 4, kTop), v1 = d.at(-6, 2), hi = d.at(-9, 1, kLeft);
        int v2 = d.at(0, -4), lo = d.at(-3, -5, kLeft), r = d.at(3, -5, kRight);
        d.join(t, v1);
        d.join(v1, hi);
        d.join(v1, v2, EdgeKind::ordinary, {{0, 0}});
        d.join(v2, lo);
        d.join2(v2, r);
        break;
    }
    case Step::c: return triangle_drawing(Step::C).mirrored({kRight, kTop, kLeft});
    }
    return d;
}

// Diamond corners: bottom (0,-8), left (-6,-2), top (0,4), right (6,-2).
// Drawn for alpha <= beta in the catalog order; the rest are mirror images.
std::optional<Drawing> diamond_drawing(Weight alpha, Weight beta) {
    Drawing d;
    const Weight o{0, 0}, one{0, 1}, two{0, 2}, dbl{1, 0};
    if (alpha == o && beta == o) return d;
    if (alpha == one && beta == one) {
        d.join(d.at(-0.3, 3.6, kTL), d.at(0.3, 3.6, kTR));
        return d;
    }
    if (alpha == two && beta == two) {
        d.join(d.at(-0.2, 3.8, kTL), d.at(0.2, 3.8, kTR));
        d.join(d.at(-0.4, 3.6, kTL), d.at(0.4, 3.6, kTR));
        return d;
    }
    if (alpha == dbl && beta == dbl) {
        d.join2(d.at(-0.3, 3.6, kTL), d.at(0.3, 3.6, kTR));
        return d;
    }
    if (alpha == o && beta == one) {
        d.join(d.at(3, 1, kTR), d.at(-3, -5, kBL));
        return d;
    }
    if (alpha == o && beta == two) {
        d.join(d.at(2, 2, kTR), d.at(-4, -4, kBL));
        d.join(d.at(4, 0, kTR), d.at(-2, -6, kBL));
        return d;
    }
    if (alpha == o && beta == dbl) {
        d.join2(d.at(3, 1, kTR), d.at(-3, -5, kBL));
        return d;
    }
    if (alpha == one && beta == two) {
        d.join(d.at(-0.2, 3.8, kTL), d.at(0.2, 3.8, kTR));
        d.join(d.at(4, 0, kTR), d.at(-2, -6, kBL));
        return d;
    }
    if (alpha == one && beta == dbl) {
        int tl = d.at(-3, 1, kTL), tr = d.at(3, 1, kTR), bl = d.at(-3, -5, kBL), br = d.at(3, -5, kBR);
        int m1 = d.at(0, 0), m2 = d.at(0, -4);
        d.join(tl, m1);
        d.join2(tr, m1);
        d.join(m1, m2);
        d.join2(m2, bl);
        d.join(m2, br);
        return d;
    }
    if (alpha == two && beta == dbl) {
        int tl_hi = d.at(-2, 2, kTL), tl_lo = d.at(-4, 0, kTL), tr = d.at(2, 2, kTR);
        int br_hi = d.at(4, -4, kBR), br_lo = d.at(2, -6, kBR), bl = d.at(-2, -6, kBL);
        int p1 = d.at(0, 0), p2 = d.at(1, -1), q1 = d.at(-1, -3), q2 = d.at(0, -4);
        d.join(tl_hi, p1);
        d.join(p1, p2);
        d.join(p2, br_hi);
        d.join(tl_lo, q1);
        d.join(q1, q2);
        d.join(q2, br_lo);
        d.join2(tr, p1);
        d.join2(p2, q1);
        d.join2(q2, bl);
        return d;
    }
    return std::nullopt;
}

} // namespace

std::vector<int> TileTemplate::side_slots(int side) const {
    const auto& c = fragment.corners();
    const int m = static_cast<int>(c.size());
    const int k = fragment.slot_count();
    std::vector<int> out;
    const int from = c[static_cast<std::size_t>(side)], to = c[static_cast<std::size_t>((side + 1) % m)];
    for (int s = (from + 1) % k; s != to; s = (s + 1) % k)
        if (fragment.slot(s).is_mark) out.push_back(s);
    return out;
}

TileTemplate triangle_template(Step s) {
    TileTemplate t;
    t.kind = TileKind::triangle;
    t.step = s;
    auto lab = triangle_labels(s);
    t.side_labels = {lab.d, lab.h};
    t.fragment = build_tile(triangle_drawing(s), 3, {0, 2, 1});
    return t;
}

TileTemplate diamond_template(Weight alpha, Weight beta) {
    if (!in_label_set(alpha) || !in_label_set(beta))
        throw std::invalid_argument("diamond labels must lie in the label set");
    TileTemplate t;
    t.kind = TileKind::diamond;
    t.alpha = alpha;
    t.beta = beta;
    auto out = diamond_outputs(alpha, beta);
    t.side_labels = {out.bottom_left, alpha, beta, out.bottom_right};
    auto dr = diamond_drawing(alpha, beta);
    if (!dr) dr = diamond_drawing(beta, alpha)->mirrored({kBR, kTR, kTL, kBL});
    t.fragment = build_tile(*dr, 4, {0, 0, 1, 1});
    return t;
}

// ---------------------------------------------------------------------------
// Assembly

namespace {

struct TileCopy {
    int offset = 0;
    const TileTemplate* tile = nullptr;
};

// Ports of one side of a tile, ordered from the lower end of the grid edge.
std::vector<int> ports_low_to_high(const TileCopy& tc, int side, bool clockwise_is_up) {
    std::vector<int> out;
    for (int s : tc.tile->side_slots(side)) out.push_back(tc.offset + tc.tile->fragment.slot(s).dart);
    if (!clockwise_is_up) std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

TriangularDiagram assemble(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return {Diagram().with_corners({0, 0, 0})};
    const GridLabels g = grid_labels(w);

    // One template per distinct tile, then one copy per grid cell.
    std::map<std::pair<int, int>, TileTemplate> catalog;
    auto tile_for = [&](int i, int j) -> const TileTemplate& {
        std::pair<int, int> key;
        if (i + j == n - 1) {
            key = {-1, step_index(w[static_cast<std::size_t>(i)])};
            auto it = catalog.find(key);
            if (it == catalog.end()) it = catalog.emplace(key, triangle_template(w[static_cast<std::size_t>(i)])).first;
            return it->second;
        }
        const Weight alpha = g.h(i, j + 1), beta = g.d(i + 1, j);
        auto idx = [](Weight x) { return static_cast<int>(std::find(kLabelSet.begin(), kLabelSet.end(), x) - kLabelSet.begin()); };
        key = {idx(alpha), idx(beta)};
        auto it = catalog.find(key);
        if (it == catalog.end()) it = catalog.emplace(key, diamond_template(alpha, beta)).first;
        return it->second;
    };

    std::map<std::pair<int, int>, TileCopy> cells;
    int total = 0;
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= r; ++i) {
            const int j = r - i;
            TileCopy tc{total, &tile_for(i, j)};
            total += tc.tile->fragment.dart_count();
            cells[{i, j}] = tc;
        }

    std::vector<int> alpha(static_cast<std::size_t>(total));
    std::vector<EdgeKind> kind(static_cast<std::size_t>(total));
    std::vector<std::vector<int>> verts;
    for (auto& [cell, tc] : cells) {
        const Diagram& f = tc.tile->fragment;
        for (int x = 0; x < f.dart_count(); ++x) {
            alpha[static_cast<std::size_t>(tc.offset + x)] = tc.offset + f.alpha(x);
            kind[static_cast<std::size_t>(tc.offset + x)] = f.kind(x);
        }
        for (const auto& rot : f.vertices()) {
            std::vector<int> r;
            for (int x : rot) r.push_back(tc.offset + x);
            verts.push_back(std::move(r));
        }
    }

    // Side numbering: triangles left/right are 0/2, diamonds BL/TL/TR/BR 0..3.
    auto is_tri = [&](int i, int j) { return i + j == n - 1; };
    auto d_side = [&](int i, int j) {  // lower-left side of the cell at (i, j)
        return ports_low_to_high(cells.at({i, j}), 0, true);
    };
    auto h_side = [&](int i, int j) {  // lower-right side
        const TileCopy& tc = cells.at({i, j});
        return ports_low_to_high(tc, is_tri(i, j) ? 2 : 3, false);
    };

    std::vector<int> fuse(static_cast<std::size_t>(total), -1);
    auto glue = [&](const std::vector<int>& lower, const std::vector<int>& upper, Weight label, const std::string& where) {
        auto sig = signature(label);
        if (lower.size() != sig.size() || upper.size() != sig.size())
            throw SignatureMismatch(where + ": strand counts " + std::to_string(lower.size()) + " and " +
                                    std::to_string(upper.size()) + " for label " + to_string(label));
        for (std::size_t k = 0; k < sig.size(); ++k) {
            const int p = lower[k], q = upper[k];
            if (kind[static_cast<std::size_t>(p)] != sig[k] || kind[static_cast<std::size_t>(q)] != sig[k])
                throw SignatureMismatch(where + ": strand kinds disagree with label " + to_string(label));
            fuse[static_cast<std::size_t>(p)] = q;
            fuse[static_cast<std::size_t>(q)] = p;
        }
    };
    for (auto& [cell, tc] : cells) {
        auto [i, j] = cell;
        // D(i,j) is shared with the top-right side of the diamond at (i-1, j).
        if (i > 0)
            glue(d_side(i, j), ports_low_to_high(cells.at({i - 1, j}), 2, false), g.d(i, j),
                 "D(" + std::to_string(i) + "," + std::to_string(j) + ")");
        // H(i,j) is shared with the top-left side of the diamond at (i, j-1).
        if (j > 0)
            glue(h_side(i, j), ports_low_to_high(cells.at({i, j - 1}), 1, true), g.h(i, j),
                 "H(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

    // Follow each surviving dart through fused ports to its far end.
    std::vector<int> new_id(static_cast<std::size_t>(total), -1);
    int next = 0;
    for (int x = 0; x < total; ++x)
        if (fuse[static_cast<std::size_t>(x)] < 0) new_id[static_cast<std::size_t>(x)] = next++;
    std::vector<int> out_alpha(static_cast<std::size_t>(next));
    std::vector<EdgeKind> out_kind(static_cast<std::size_t>(next));
    for (int x = 0; x < total; ++x) {
        if (fuse[static_cast<std::size_t>(x)] >= 0) continue;
        int e = alpha[static_cast<std::size_t>(x)];
        for (int guard = 0; fuse[static_cast<std::size_t>(e)] >= 0; ++guard) {
            if (guard > total) throw SignatureMismatch("closed strand while gluing");
            const int across = fuse[static_cast<std::size_t>(e)];
            if (kind[static_cast<std::size_t>(across)] != kind[static_cast<std::size_t>(x)])
                throw SignatureMismatch("strand changes kind across a glued edge");
            e = alpha[static_cast<std::size_t>(across)];
        }
        out_alpha[static_cast<std::size_t>(new_id[static_cast<std::size_t>(x)])] = new_id[static_cast<std::size_t>(e)];
        out_kind[static_cast<std::size_t>(new_id[static_cast<std::size_t>(x)])] = kind[static_cast<std::size_t>(x)];
    }
    for (auto& rot : verts)
        for (int& x : rot) x = new_id[static_cast<std::size_t>(x)];

    // Boundary, clockwise from A.
    std::vector<Slot> slots{Slot::gap()};
    auto side_marks = [&](const std::vector<int>& darts) {
        for (int x : darts) {
            if (slots.back().is_mark) slots.push_back(Slot::gap());
            slots.push_back(Slot::mark(new_id[static_cast<std::size_t>(x)]));
        }
    };
    std::vector<int> left;
    for (int j = 0; j < n; ++j)
        for (int x : d_side(0, j)) left.push_back(x);
    side_marks(left);
    const int corner_x = static_cast<int>(slots.size());
    slots.push_back(Slot::gap());
    for (int k = 1; k <= n; ++k) {
        const TileCopy& tc = cells.at({k - 1, n - k});
        for (int s : tc.tile->side_slots(kTop)) slots.push_back(Slot::mark(new_id[static_cast<std::size_t>(tc.offset + tc.tile->fragment.slot(s).dart)]));
        slots.push_back(Slot::gap());
    }
    const int corner_y = static_cast<int>(slots.size()) - 1;
    std::vector<int> right;
    for (int i = n - 1; i >= 0; --i) {
        auto ports = h_side(i, 0);
        right.insert(right.end(), ports.rbegin(), ports.rend());
    }
    side_marks(right);
    return {Diagram(std::move(verts), std::move(out_alpha), std::move(out_kind), std::move(slots), {0, corner_x, corner_y})};
}

// ---------------------------------------------------------------------------
// Double-edge resolution

namespace {

// Mutable map used while rewriting. Darts and vertices are retired rather than
// erased; build() compacts them.
class Editor {
public:
    explicit Editor(const Diagram& d) {
        alpha_ = d.alpha();
        kind_ = d.kinds();
        rung_.assign(alpha_.size(), 0);
        live_.assign(alpha_.size(), 1);
        verts_ = d.vertices();
        std::vector<char> corner(static_cast<std::size_t>(d.slot_count()), -1);
        for (std::size_t c = 0; c < d.corners().size(); ++c) corner[static_cast<std::size_t>(d.corners()[c])] = static_cast<char>(c);
        for (int s = 0; s < d.slot_count(); ++s)
            slots_.push_back({d.slot(s).is_mark, d.slot(s).dart, corner[static_cast<std::size_t>(s)]});
        corner_count_ = static_cast<int>(d.corners().size());
    }

    int dart_count() const { return static_cast<int>(alpha_.size()); }
    int alpha(int x) const { return alpha_[static_cast<std::size_t>(x)]; }
    EdgeKind kind(int x) const { return kind_[static_cast<std::size_t>(x)]; }
    bool rung(int x) const { return rung_[static_cast<std::size_t>(x)] != 0; }
    bool live(int x) const { return live_[static_cast<std::size_t>(x)] != 0; }

    int new_dart() {
        alpha_.push_back(-1);
        kind_.push_back(EdgeKind::ordinary);
        rung_.push_back(0);
        live_.push_back(1);
        return dart_count() - 1;
    }

    void join(int x, int y, EdgeKind k, bool rung) {
        alpha_[static_cast<std::size_t>(x)] = y;
        alpha_[static_cast<std::size_t>(y)] = x;
        kind_[static_cast<std::size_t>(x)] = kind_[static_cast<std::size_t>(y)] = k;
        rung_[static_cast<std::size_t>(x)] = rung_[static_cast<std::size_t>(y)] = rung ? 1 : 0;
    }

    // Vertex holding x, or -1 when x is at the boundary.
    int vertex_of(int x) const {
        for (std::size_t v = 0; v < verts_.size(); ++v)
            if (std::find(verts_[v].begin(), verts_[v].end(), x) != verts_[v].end()) return static_cast<int>(v);
        return -1;
    }
    int slot_of(int x) const {
        for (std::size_t s = 0; s < slots_.size(); ++s)
            if (slots_[s].mark && slots_[s].dart == x) return static_cast<int>(s);
        return -1;
    }

    // The two other darts at the end of x, as (next ccw, previous ccw). At the
    // boundary the mark is split in two and fresh darts facing it are returned.
    std::pair<int, int> open_end(int x) {
        const int v = vertex_of(x);
        if (v >= 0) {
            auto rot = verts_[static_cast<std::size_t>(v)];
            std::rotate(rot.begin(), std::find(rot.begin(), rot.end(), x), rot.end());
            if (rot.size() != 3) throw DanglingDouble("double edge at a vertex of degree " + std::to_string(rot.size()));
            verts_[static_cast<std::size_t>(v)].clear();
            return {rot[1], rot[2]};
        }
        const int s = slot_of(x);
        if (s < 0) throw DanglingDouble("double edge end is neither at a vertex nor at a mark");
        const int first_mark = new_dart(), second_mark = new_dart();
        const int first = new_dart(), second = new_dart();
        join(first, first_mark, EdgeKind::ordinary, false);
        join(second, second_mark, EdgeKind::ordinary, false);
        slots_[static_cast<std::size_t>(s)] = {true, first_mark, -1};
        slots_.insert(slots_.begin() + s + 1, {{false, -1, -1}, {true, second_mark, -1}});
        // Boundary rotation runs in slot order: the later mark comes next.
        return {second, first};
    }

    // The replacement: x-y double becomes an ordinary rung x-y between two
    // new vertices, each taking one ordinary strand from either end.
    void h_replace(int x) {
        const int y = alpha(x);
        auto [u1, u2] = open_end(x);
        auto [v1, v2] = open_end(y);
        join(x, y, EdgeKind::ordinary, true);
        verts_.push_back({x, v2, u1});
        verts_.push_back({y, u2, v1});
    }

    void remove_edge(int x) {
        const int y = alpha(x);
        for (int z : {x, y}) {
            const int v = vertex_of(z);
            if (v < 0) throw DanglingDouble("cannot delete an edge at the boundary");
            auto& rot = verts_[static_cast<std::size_t>(v)];
            rot.erase(std::find(rot.begin(), rot.end(), z));
            live_[static_cast<std::size_t>(z)] = 0;
        }
    }

    void smooth(int v) {
        auto& rot = verts_[static_cast<std::size_t>(v)];
        if (rot.size() != 2) throw DegreeMismatch("smoothing a vertex of degree " + std::to_string(rot.size()));
        const int p = rot[0], q = rot[1];
        const int pp = alpha(p), qq = alpha(q);
        if (pp == q) throw DegreeMismatch("smoothing would leave a free loop");
        if (kind(p) != kind(q)) throw DegreeMismatch("smoothing joins edges of different kinds");
        join(pp, qq, kind(p), rung(p) || rung(q));
        live_[static_cast<std::size_t>(p)] = live_[static_cast<std::size_t>(q)] = 0;
        rot.clear();
    }

    // Compacted diagram and the new id of every live dart.
    std::pair<Diagram, std::vector<int>> build() const {
        std::vector<int> id(alpha_.size(), -1);
        int next = 0;
        for (std::size_t x = 0; x < alpha_.size(); ++x)
            if (live_[x]) id[x] = next++;
        std::vector<int> alpha(static_cast<std::size_t>(next));
        std::vector<EdgeKind> kinds(static_cast<std::size_t>(next));
        for (std::size_t x = 0; x < alpha_.size(); ++x) {
            if (!live_[x]) continue;
            alpha[static_cast<std::size_t>(id[x])] = id[static_cast<std::size_t>(alpha_[x])];
            kinds[static_cast<std::size_t>(id[x])] = kind_[x];
        }
        std::vector<std::vector<int>> verts;
        for (const auto& rot : verts_) {
            if (rot.empty()) continue;
            std::vector<int> r;
            for (int x : rot) r.push_back(id[static_cast<std::size_t>(x)]);
            verts.push_back(std::move(r));
        }
        std::vector<Slot> slots;
        std::vector<int> corners(static_cast<std::size_t>(corner_count_), -1);
        for (const auto& s : slots_) {
            if (s.corner >= 0) corners[static_cast<std::size_t>(s.corner)] = static_cast<int>(slots.size());
            slots.push_back(s.mark ? Slot::mark(id[static_cast<std::size_t>(s.dart)]) : Slot::gap());
        }
        return {Diagram(std::move(verts), std::move(alpha), std::move(kinds), std::move(slots), std::move(corners)), id};
    }

private:
    struct BSlot {
        bool mark;
        int dart;
        int corner;
    };
    std::vector<int> alpha_;
    std::vector<EdgeKind> kind_;
    std::vector<char> rung_;
    std::vector<char> live_;
    std::vector<std::vector<int>> verts_;
    std::vector<BSlot> slots_;
    int corner_count_ = 0;
};

// A dart of a rung to delete, or -1 when no square carries two new rungs.
int surplus_rung(const Editor& ed) {
    auto [d, id] = ed.build();
    std::vector<int> old(static_cast<std::size_t>(d.dart_count()));
    for (std::size_t x = 0; x < id.size(); ++x)
        if (id[x] >= 0) old[static_cast<std::size_t>(id[x])] = static_cast<int>(x);
    auto fs = faces(d);
    for (const auto& f : fs.faces) {
        if (f.touches_boundary || f.degree() != 4) continue;
        for (int k = 0; k < 2; ++k) {
            const int p = old[static_cast<std::size_t>(f.darts[static_cast<std::size_t>(k)])];
            const int q = old[static_cast<std::size_t>(f.darts[static_cast<std::size_t>(k + 2)])];
            if (ed.rung(p) && ed.rung(q)) return std::max(std::min(p, ed.alpha(p)), std::min(q, ed.alpha(q)));
        }
    }
    return -1;
}

Editor resolve_in_place(const Diagram& d) {
    Editor ed(d);
    std::vector<int> doubles;
    for (int x = 0; x < d.dart_count(); ++x)
        if (d.kind(x) == EdgeKind::doubled && x < d.alpha(x)) doubles.push_back(x);
    for (int x : doubles) {
        if (d.is_boundary_dart(x) && d.is_boundary_dart(d.alpha(x)))
            throw DanglingDouble("double edge joins two boundary marks with no vertex");
        ed.h_replace(x);
    }
    for (int x = surplus_rung(ed); x >= 0; x = surplus_rung(ed)) {
        const int u = ed.vertex_of(x), v = ed.vertex_of(ed.alpha(x));
        ed.remove_edge(x);
        // Both ends now have degree two; the rails run straight through.
        ed.smooth(u);
        ed.smooth(v);
    }
    return ed;
}

} // namespace

Diagram resolve_doubles(const Diagram& d) {
    if (d.count_kind(EdgeKind::doubled) == 0) return d;
    return resolve_in_place(d).build().first;
}

TriangularDiagram resolve_doubles(const TriangularDiagram& td) { return {resolve_doubles(td.diagram)}; }

} // namespace g2web
