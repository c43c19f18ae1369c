#include "g2web/planar_map.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace g2web {

std::string_view to_string(EdgeKind k) { return k == EdgeKind::ordinary ? "ordinary" : "double"; }

Diagram::Diagram() : slots_{Slot::gap()} {}

Diagram::Diagram(std::vector<std::vector<int>> vertices, std::vector<int> alpha, std::vector<EdgeKind> kinds,
                 std::vector<Slot> slots, std::vector<int> corners)
    : vertices_(std::move(vertices)),
      alpha_(std::move(alpha)),
      kinds_(std::move(kinds)),
      slots_(std::move(slots)),
      corners_(std::move(corners)) {
    const int n = dart_count();
    if (static_cast<int>(kinds_.size()) != n) throw MalformedMap("kind table size differs from dart count");
    for (int d = 0; d < n; ++d) {
        int e = alpha_[static_cast<std::size_t>(d)];
        if (e < 0 || e >= n) throw MalformedMap("dart " + std::to_string(d) + " has partner out of range");
        if (e == d) throw MalformedMap("dart " + std::to_string(d) + " is its own partner");
        if (alpha_[static_cast<std::size_t>(e)] != d) throw MalformedMap("edge pairing is not an involution at dart " + std::to_string(d));
        if (kinds_[static_cast<std::size_t>(e)] != kinds_[static_cast<std::size_t>(d)])
            throw MalformedMap("darts of one edge disagree on kind at dart " + std::to_string(d));
    }
    vertex_of_.assign(static_cast<std::size_t>(n), -1);
    pos_in_vertex_.assign(static_cast<std::size_t>(n), -1);
    slot_of_.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    auto claim = [&](int d) {
        if (d < 0 || d >= n) throw MalformedMap("dart " + std::to_string(d) + " out of range");
        if (seen[static_cast<std::size_t>(d)]++) throw MalformedMap("dart " + std::to_string(d) + " is attached twice");
    };
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].empty()) throw MalformedMap("vertex " + std::to_string(v) + " has no darts");
        for (std::size_t i = 0; i < vertices_[v].size(); ++i) {
            int d = vertices_[v][i];
            claim(d);
            vertex_of_[static_cast<std::size_t>(d)] = static_cast<int>(v);
            pos_in_vertex_[static_cast<std::size_t>(d)] = static_cast<int>(i);
        }
    }
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        if (!slots_[s].is_mark) continue;
        claim(slots_[s].dart);
        slot_of_[static_cast<std::size_t>(slots_[s].dart)] = static_cast<int>(s);
        ++mark_count_;
    }
    for (int d = 0; d < n; ++d)
        if (!seen[static_cast<std::size_t>(d)]) throw MalformedMap("dart " + std::to_string(d) + " is not attached");
    for (int c : corners_) {
        if (c < 0 || c >= slot_count()) throw MalformedMap("corner slot out of range");
        if (slots_[static_cast<std::size_t>(c)].is_mark) throw MalformedMap("corner slot " + std::to_string(c) + " is a marked point");
    }
    next_boundary_.assign(static_cast<std::size_t>(n), -1);
    auto bd = boundary_darts();
    for (std::size_t i = 0; i < bd.size(); ++i)
        next_boundary_[static_cast<std::size_t>(bd[i])] = bd[(i + 1) % bd.size()];
}

Diagram Diagram::with_corners(std::vector<int> corners) const {
    return Diagram(vertices_, alpha_, kinds_, slots_, std::move(corners));
}

int Diagram::sigma(int d) const {
    int v = vertex_of(d);
    if (v < 0) return next_boundary_[static_cast<std::size_t>(d)];
    const auto& rot = vertices_[static_cast<std::size_t>(v)];
    return rot[(static_cast<std::size_t>(pos_in_vertex_[static_cast<std::size_t>(d)]) + 1) % rot.size()];
}

std::vector<int> Diagram::boundary_darts() const {
    std::vector<int> out;
    for (const Slot& s : slots_)
        if (s.is_mark) out.push_back(s.dart);
    return out;
}

int Diagram::count_kind(EdgeKind k) const {
    return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), k)) / 2;
}

std::vector<int> TriangularDiagram::top_marks() const {
    const int k = diagram.slot_count();
    const int x = corner_x(), y = corner_y();
    std::vector<int> out;
    int s = (x + 1) % k;
    for (int steps = 0; steps < k; ++steps, s = (s + 1) % k) {
        if (s == y && x != y) break;
        if (diagram.slot(s).is_mark) out.push_back(s);
        if (s == y) break;
    }
    return out;
}

FaceSet faces(const Diagram& d) {
    FaceSet fs;
    const int n = d.dart_count();
    fs.face_of_dart.assign(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (fs.face_of_dart[static_cast<std::size_t>(start)] >= 0) continue;
        Face f;
        int cur = start;
        do {
            if (fs.face_of_dart[static_cast<std::size_t>(cur)] >= 0) throw MalformedMap("face permutation is not a permutation");
            fs.face_of_dart[static_cast<std::size_t>(cur)] = static_cast<int>(fs.faces.size());
            f.darts.push_back(cur);
            if (d.is_boundary_dart(cur)) f.touches_boundary = true;
            cur = d.face_next(cur);
        } while (cur != start);
        fs.faces.push_back(std::move(f));
    }
    if (fs.faces.empty()) fs.faces.push_back(Face{{}, true});

    const int k = d.slot_count();
    fs.face_of_slot.assign(static_cast<std::size_t>(k), 0);
    if (d.mark_count() > 0) {
        // The interval ending at a mark belongs to the face leaving through it.
        for (int s = 0; s < k; ++s) {
            int t = (s + 1) % k;
            while (!d.slot(t).is_mark) t = (t + 1) % k;
            fs.face_of_slot[static_cast<std::size_t>(s)] = fs.face_of_dart[static_cast<std::size_t>(d.slot(t).dart)];
        }
    }
    return fs;
}

bool is_nonpositive(const Diagram& d) {
    auto fs = faces(d);
    return std::all_of(fs.faces.begin(), fs.faces.end(),
                       [](const Face& f) { return f.touches_boundary || f.degree() >= 6; });
}

bool is_planar_disc(const Diagram& d) {
    if (d.dart_count() == 0) return true;
    auto fs = faces(d);
    return d.vertex_count() + 1 - d.edge_count() + static_cast<int>(fs.faces.size()) == 2;
}

ValidationReport validate(const Diagram& d, bool allow_double) {
    ValidationReport r;
    auto problem = [&](std::string s) {
        r.ok = false;
        r.problems.push_back(std::move(s));
    };
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& rot = d.vertex(v);
        if (rot.size() != 3) {
            problem("vertex " + std::to_string(v) + " has degree " + std::to_string(rot.size()));
            continue;
        }
        int doubles = 0;
        for (int x : rot) doubles += d.kind(x) == EdgeKind::doubled;
        if (doubles > 1 || (doubles == 1 && !allow_double))
            problem("vertex " + std::to_string(v) + " meets " + std::to_string(doubles) + " double edges");
    }
    if (!allow_double && d.count_kind(EdgeKind::doubled) > 0) problem("diagram contains double edges");

    // Every vertex must be reachable from the boundary.
    std::vector<char> reached(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<int> stack;
    for (int x : d.boundary_darts()) stack.push_back(d.alpha(x));
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int v = d.vertex_of(x);
        if (v < 0 || reached[static_cast<std::size_t>(v)]) continue;
        reached[static_cast<std::size_t>(v)] = 1;
        for (int y : d.vertex(v)) stack.push_back(d.alpha(y));
    }
    for (int v = 0; v < d.vertex_count(); ++v)
        if (!reached[static_cast<std::size_t>(v)]) {
            problem("vertex " + std::to_string(v) + " lies on a component detached from the boundary");
            break;
        }
    if (r.ok && !is_planar_disc(d)) problem("Euler characteristic is not that of a disc");
    return r;
}

bool is_trivalent(const Diagram& d, bool allow_double) {
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& rot = d.vertex(v);
        if (rot.size() != 3) return false;
        int doubles = 0;
        for (int x : rot) doubles += d.kind(x) == EdgeKind::doubled;
        if (doubles > (allow_double ? 1 : 0)) return false;
    }
    return true;
}

namespace {

// pi * sqrt(3) = 5.441398092702653..., bracketed by these rationals over 10^12.
constexpr long long kPiSqrt3Lo = 5441398092702LL;
constexpr long long kPiSqrt3Hi = 5441398092703LL;
constexpr long long kScale = 1000000000000LL;

} // namespace

bool isoperimetric_check(const Diagram& d, int n) {
    using i128 = __int128;
    const i128 v = d.vertex_count();
    const i128 rhs = static_cast<i128>(n) * n * kScale;
    if (v * kPiSqrt3Hi <= rhs) return true;
    if (v * kPiSqrt3Lo > rhs) return false;
    // Only reachable when n^2 / v is within 1e-12 of pi sqrt 3.
    return static_cast<long double>(v) * std::acos(-1.0L) * std::sqrt(3.0L) <= static_cast<long double>(n) * n;
}

bool isoperimetric_check(const Diagram& d) { return isoperimetric_check(d, d.mark_count()); }

int isoperimetric_vertex_bound(int n) {
    using i128 = __int128;
    return static_cast<int>((static_cast<i128>(n) * n * kScale) / kPiSqrt3Hi);
}

Diagram canonical_form(const Diagram& d) {
    const int n = d.dart_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    auto visit = [&](int x) {
        if (label[static_cast<std::size_t>(x)] >= 0) return;
        label[static_cast<std::size_t>(x)] = static_cast<int>(order.size());
        order.push_back(x);
    };
    for (int x : d.boundary_darts()) visit(x);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        visit(d.alpha(x));
        if (!d.is_boundary_dart(x))
            for (int y = d.sigma(x); y != x; y = d.sigma(y)) visit(y);
    }
    // Darts unreachable from the boundary keep their relative order at the end.
    for (int x = 0; x < n; ++x) visit(x);

    std::vector<int> alpha(static_cast<std::size_t>(n));
    std::vector<EdgeKind> kinds(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        alpha[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = label[static_cast<std::size_t>(d.alpha(x))];
        kinds[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = d.kind(x);
    }
    std::vector<std::vector<int>> verts;
    for (const auto& rot : d.vertices()) {
        std::vector<int> r;
        for (int x : rot) r.push_back(label[static_cast<std::size_t>(x)]);
        std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
        verts.push_back(std::move(r));
    }
    std::sort(verts.begin(), verts.end(), [](const auto& p, const auto& q) { return p.front() < q.front(); });
    std::vector<Slot> slots = d.slots();
    for (Slot& s : slots)
        if (s.is_mark) s.dart = label[static_cast<std::size_t>(s.dart)];
    return Diagram(std::move(verts), std::move(alpha), std::move(kinds), std::move(slots), d.corners());
}

std::string canonical_encoding(const Diagram& d) { return serialize(canonical_form(d)); }

Diagram normalized_disc(const Diagram& d, int anchor) {
    const int k = d.slot_count();
    std::vector<Slot> slots{Slot::gap()};
    for (int i = 1; i <= k; ++i) {
        const Slot& s = d.slot((anchor + i) % k);
        if (!s.is_mark) continue;
        if (slots.back().is_mark) slots.push_back(Slot::gap());
        slots.push_back(s);
    }
    return Diagram(d.vertices(), d.alpha(), d.kinds(), std::move(slots));
}

Diagram smooth_valence2(const Diagram& d, int vertex) {
    if (vertex < 0 || vertex >= d.vertex_count()) throw DegreeMismatch("no such vertex");
    const auto& rot = d.vertex(vertex);
    if (rot.size() != 2) throw DegreeMismatch("vertex " + std::to_string(vertex) + " has degree " + std::to_string(rot.size()));
    const int p = rot[0], q = rot[1];
    if (d.kind(p) != EdgeKind::ordinary || d.kind(q) != EdgeKind::ordinary)
        throw DegreeMismatch("vertex " + std::to_string(vertex) + " meets a double edge");
    if (d.alpha(p) == q) throw DegreeMismatch("smoothing vertex " + std::to_string(vertex) + " would leave a free loop");
    const int pp = d.alpha(p), qq = d.alpha(q);

    // Renumber darts, dropping p and q.
    std::vector<int> relabel(static_cast<std::size_t>(d.dart_count()), -1);
    int next = 0;
    for (int x = 0; x < d.dart_count(); ++x)
        if (x != p && x != q) relabel[static_cast<std::size_t>(x)] = next++;
    std::vector<int> alpha(static_cast<std::size_t>(next));
    std::vector<EdgeKind> kinds(static_cast<std::size_t>(next));
    for (int x = 0; x < d.dart_count(); ++x) {
        if (x == p || x == q) continue;
        int partner = d.alpha(x);
        if (x == pp) partner = qq;
        if (x == qq) partner = pp;
        alpha[static_cast<std::size_t>(relabel[static_cast<std::size_t>(x)])] = relabel[static_cast<std::size_t>(partner)];
        kinds[static_cast<std::size_t>(relabel[static_cast<std::size_t>(x)])] = d.kind(x);
    }
    std::vector<std::vector<int>> verts;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == vertex) continue;
        std::vector<int> r;
        for (int x : d.vertex(v)) r.push_back(relabel[static_cast<std::size_t>(x)]);
        verts.push_back(std::move(r));
    }
    std::vector<Slot> slots = d.slots();
    for (Slot& s : slots)
        if (s.is_mark) s.dart = relabel[static_cast<std::size_t>(s.dart)];
    return Diagram(std::move(verts), std::move(alpha), std::move(kinds), std::move(slots), d.corners());
}

ParseError::ParseError(int line_, int column_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

std::string serialize(const Diagram& d) {
    std::ostringstream os;
    os << "g2web 1\n";
    os << "boundary " << d.slot_count() << '\n';
    os << "slots";
    for (const Slot& s : d.slots()) {
        if (s.is_mark)
            os << " mark:" << s.dart;
        else
            os << " gap";
    }
    os << '\n';
    for (const auto& rot : d.vertices()) {
        os << "vertex";
        for (int x : rot) os << ' ' << x;
        os << '\n';
    }
    for (int x = 0; x < d.dart_count(); ++x)
        if (x < d.alpha(x)) os << "edge " << x << ' ' << d.alpha(x) << ' ' << to_string(d.kind(x)) << '\n';
    if (!d.corners().empty()) {
        os << "corners";
        for (int c : d.corners()) os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> split_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_nonneg(const Token& t, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size() || v < 0)
        throw ParseError(line, t.column, "expected a non-negative integer, found '" + std::string(t.text) + "'");
    return v;
}

} // namespace

Diagram parse_diagram(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    int ln = 0;
    auto next_tokens = [&]() -> std::vector<Token> {
        for (int i = ln; i < static_cast<int>(lines.size()); ++i) {
            auto toks = split_line(lines[static_cast<std::size_t>(i)]);
            if (toks.empty()) continue;
            ln = i + 1;
            return toks;
        }
        return {};
    };

    auto header = next_tokens();
    if (header.size() != 2 || header[0].text != "g2web" || header[1].text != "1")
        throw ParseError(std::max(ln, 1), 1, "expected header 'g2web 1'");
    auto bline = next_tokens();
    if (bline.size() != 2 || bline[0].text != "boundary") throw ParseError(ln, 1, "expected 'boundary <k>'");
    const int k = parse_nonneg(bline[1], ln);
    auto sline = next_tokens();
    if (sline.empty() || sline[0].text != "slots") throw ParseError(ln, 1, "expected 'slots ...'");
    if (static_cast<int>(sline.size()) - 1 != k)
        throw ParseError(ln, 1, "boundary declares " + std::to_string(k) + " slots but " + std::to_string(sline.size() - 1) + " are listed");

    // Darts in the file may use any ids; they are compacted in increasing order.
    std::map<int, int> dart_id;
    auto dart = [&](const Token& t, int line) {
        int raw = parse_nonneg(t, line);
        dart_id.try_emplace(raw, 0);
        return raw;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 1; i < sline.size(); ++i) {
        const Token& t = sline[i];
        if (t.text == "gap") {
            slots.push_back(Slot::gap());
        } else if (t.text.substr(0, 5) == "mark:") {
            slots.push_back(Slot::mark(dart(Token{t.text.substr(5), t.column + 5}, ln)));
        } else {
            throw ParseError(ln, t.column, "expected 'gap' or 'mark:<dart>', found '" + std::string(t.text) + "'");
        }
    }

    std::vector<std::vector<int>> verts;
    std::vector<std::array<int, 2>> edges;
    std::vector<EdgeKind> edge_kinds;
    std::vector<int> edge_lines;
    std::vector<int> corners;
    bool seen_edge = false, seen_corners = false;
    for (auto toks = next_tokens(); !toks.empty(); toks = next_tokens()) {
        const std::string_view key = toks[0].text;
        if (seen_corners) throw ParseError(ln, 1, "nothing may follow the corners line");
        if (key == "vertex") {
            if (seen_edge) throw ParseError(ln, 1, "vertex lines must precede edge lines");
            if (toks.size() < 2) throw ParseError(ln, 1, "vertex without darts");
            std::vector<int> rot;
            for (std::size_t i = 1; i < toks.size(); ++i) rot.push_back(dart(toks[i], ln));
            verts.push_back(std::move(rot));
        } else if (key == "edge") {
            seen_edge = true;
            if (toks.size() != 4) throw ParseError(ln, 1, "expected 'edge <dart> <dart> <ordinary|double>'");
            int x = dart(toks[1], ln), y = dart(toks[2], ln);
            EdgeKind kind;
            if (toks[3].text == "ordinary")
                kind = EdgeKind::ordinary;
            else if (toks[3].text == "double")
                kind = EdgeKind::doubled;
            else
                throw ParseError(ln, toks[3].column, "unknown edge kind '" + std::string(toks[3].text) + "'");
            edges.push_back({x, y});
            edge_kinds.push_back(kind);
            edge_lines.push_back(ln);
        } else if (key == "corners") {
            seen_corners = true;
            if (toks.size() != 4 && toks.size() != 5) throw ParseError(ln, 1, "corners takes three or four slots");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                int c = parse_nonneg(toks[i], ln);
                if (c >= k) throw ParseError(ln, toks[i].column, "corner slot out of range");
                corners.push_back(c);
            }
        } else {
            throw ParseError(ln, toks[0].column, "unknown record '" + std::string(key) + "'");
        }
    }

    const int n = static_cast<int>(dart_id.size());
    int next_id = 0;
    for (auto& [raw, id] : dart_id) id = next_id++;
    for (auto& slot : slots)
        if (slot.is_mark) slot.dart = dart_id[slot.dart];
    for (auto& rot : verts)
        for (int& x : rot) x = dart_id[x];
    for (auto& e : edges) e = {dart_id[e[0]], dart_id[e[1]]};
    std::vector<int> alpha(static_cast<std::size_t>(n), -1);
    std::vector<EdgeKind> kinds(static_cast<std::size_t>(n), EdgeKind::ordinary);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [x, y] = edges[e];
        if (x == y || alpha[static_cast<std::size_t>(x)] >= 0 || alpha[static_cast<std::size_t>(y)] >= 0)
            throw ParseError(edge_lines[e], 1, "dart used by more than one edge");
        alpha[static_cast<std::size_t>(x)] = y;
        alpha[static_cast<std::size_t>(y)] = x;
        kinds[static_cast<std::size_t>(x)] = kinds[static_cast<std::size_t>(y)] = edge_kinds[e];
    }
    for (int x = 0; x < n; ++x)
        if (alpha[static_cast<std::size_t>(x)] < 0) throw ParseError(ln, 1, "a dart has no edge record");
    try {
        Diagram d(std::move(verts), std::move(alpha), std::move(kinds), std::move(slots), std::move(corners));
        auto report = validate(d);
        if (!report.ok) throw ParseError(ln, 1, report.problems.front());
        return d;
    } catch (const MalformedMap& e) {
        throw ParseError(ln, 1, e.what());
    }
}

Diagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string render_svg(const Diagram& d) {
    constexpr double kSize = 400.0, kCentre = 200.0, kRadius = 170.0;
    const int k = d.slot_count();
    const double pi = std::acos(-1.0);
    std::vector<std::pair<double, double>> slot_pos(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) {
        // Clockwise on screen, starting at the bottom.
        double t = -pi / 2 - 2 * pi * s / std::max(k, 1);
        slot_pos[static_cast<std::size_t>(s)] = {kCentre + kRadius * std::cos(t), kCentre - kRadius * std::sin(t)};
    }
    const int nv = d.vertex_count();
    std::vector<std::pair<double, double>> vpos(static_cast<std::size_t>(nv), {kCentre, kCentre});
    for (int v = 0; v < nv; ++v) {
        double t = 2 * pi * v / std::max(nv, 1);
        vpos[static_cast<std::size_t>(v)] = {kCentre + 20 * std::cos(t), kCentre + 20 * std::sin(t)};
    }
    auto end_pos = [&](int x) {
        int v = d.vertex_of(x);
        return v >= 0 ? vpos[static_cast<std::size_t>(v)] : slot_pos[static_cast<std::size_t>(d.slot_of(x))];
    };
    for (int iter = 0; iter < 500; ++iter) {
        for (int v = 0; v < nv; ++v) {
            double sx = 0, sy = 0;
            for (int x : d.vertex(v)) {
                auto p = end_pos(d.alpha(x));
                sx += p.first;
                sy += p.second;
            }
            const double deg = static_cast<double>(d.vertex(v).size());
            vpos[static_cast<std::size_t>(v)] = {sx / deg, sy / deg};
        }
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
    os << "<circle cx=\"" << kCentre << "\" cy=\"" << kCentre << "\" r=\"" << kRadius
       << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
    for (int x = 0; x < d.dart_count(); ++x) {
        if (x > d.alpha(x)) continue;
        auto p = end_pos(x), q = end_pos(d.alpha(x));
        if (d.kind(x) == EdgeKind::doubled) {
            os << "<line x1=\"" << p.first << "\" y1=\"" << p.second << "\" x2=\"" << q.first << "\" y2=\"" << q.second
               << "\" stroke=\"black\" stroke-width=\"6\"/>\n";
            os << "<line x1=\"" << p.first << "\" y1=\"" << p.second << "\" x2=\"" << q.first << "\" y2=\"" << q.second
               << "\" stroke=\"white\" stroke-width=\"2\"/>\n";
        } else {
            os << "<line x1=\"" << p.first << "\" y1=\"" << p.second << "\" x2=\"" << q.first << "\" y2=\"" << q.second
               << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        }
    }
    for (const auto& p : vpos) os << "<circle cx=\"" << p.first << "\" cy=\"" << p.second << "\" r=\"3\"/>\n";
    for (int s = 0; s < k; ++s) {
        const auto& p = slot_pos[static_cast<std::size_t>(s)];
        if (d.slot(s).is_mark) os << "<circle cx=\"" << p.first << "\" cy=\"" << p.second << "\" r=\"4\" fill=\"#c00\"/>\n";
    }
    const char* names = "AXY";
    for (std::size_t i = 0; i < d.corners().size() && i < 3; ++i) {
        const auto& p = slot_pos[static_cast<std::size_t>(d.corners()[i])];
        os << "<text x=\"" << p.first << "\" y=\"" << p.second << "\" font-size=\"14\">" << names[i] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace g2web

namespace g2web {

int Sketch::vertex(double x, double y) {
    nodes_.push_back({{x, y}, false, {}});
    return static_cast<int>(nodes_.size()) - 1;
}

int Sketch::mark(double x, double y) {
    nodes_.push_back({{x, y}, true, {}});
    slot_nodes_.push_back(static_cast<int>(nodes_.size()) - 1);
    return static_cast<int>(nodes_.size()) - 1;
}

int Sketch::gap() {
    slot_nodes_.push_back(-1);
    return static_cast<int>(slot_nodes_.size()) - 1;
}

void Sketch::edge(int p, int q, EdgeKind kind, std::vector<Point> bends) {
    edges_.push_back({p, q, kind, std::move(bends)});
}

Diagram Sketch::build(std::vector<int> corners) const {
    std::vector<Node> nodes = nodes_;
    const int n = 2 * static_cast<int>(edges_.size());
    std::vector<int> alpha(static_cast<std::size_t>(n));
    std::vector<EdgeKind> kinds(static_cast<std::size_t>(n));
    auto angle = [](Point from, Point to) { return std::atan2(to.y - from.y, to.x - from.x); };
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        const int dp = static_cast<int>(2 * e), dq = dp + 1;
        alpha[static_cast<std::size_t>(dp)] = dq;
        alpha[static_cast<std::size_t>(dq)] = dp;
        kinds[static_cast<std::size_t>(dp)] = kinds[static_cast<std::size_t>(dq)] = ed.kind;
        Point toward_q = ed.bends.empty() ? nodes[static_cast<std::size_t>(ed.q)].at : ed.bends.front();
        Point toward_p = ed.bends.empty() ? nodes[static_cast<std::size_t>(ed.p)].at : ed.bends.back();
        nodes[static_cast<std::size_t>(ed.p)].darts.push_back({angle(nodes[static_cast<std::size_t>(ed.p)].at, toward_q), dp});
        nodes[static_cast<std::size_t>(ed.q)].darts.push_back({angle(nodes[static_cast<std::size_t>(ed.q)].at, toward_p), dq});
    }
    std::vector<std::vector<int>> verts;
    for (Node& nd : nodes) {
        if (nd.boundary) {
            if (nd.darts.size() != 1) throw MalformedMap("a boundary mark must carry exactly one edge end");
            continue;
        }
        std::sort(nd.darts.begin(), nd.darts.end());
        std::vector<int> rot;
        for (auto& [a, d] : nd.darts) rot.push_back(d);
        if (!rot.empty()) verts.push_back(std::move(rot));
    }
    std::vector<Slot> slots;
    for (int nd : slot_nodes_)
        slots.push_back(nd < 0 ? Slot::gap() : Slot::mark(nodes[static_cast<std::size_t>(nd)].darts.front().second));
    if (slots.empty()) slots.push_back(Slot::gap());
    return Diagram(std::move(verts), std::move(alpha), std::move(kinds), std::move(slots), std::move(corners));
}

} // namespace g2web
