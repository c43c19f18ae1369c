#include "g2web/bijection.hpp"

#include "g2web/cutpath.hpp"
#include "g2web/tiles.hpp"
#include "g2web/walks.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

namespace g2web {

NotAStep::NotAStep(int pos, Weight diff)
    : std::runtime_error("not a step at letter " + std::to_string(pos) + ": difference " + to_string(diff)),
      position(pos),
      difference(diff) {}

TriangularDiagram word_to_diagram(const Word& w) { return resolve_doubles(assemble(w)); }

Word diagram_to_word(const TriangularDiagram& td) {
    const auto p = weight_profile(td);
    Word w;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Weight diff{p[i].a - p[i - 1].a, p[i].b - p[i - 1].b};
        auto s = step_from_weight(diff);
        if (!s) throw NotAStep(static_cast<int>(i), diff);
        w.push_back(*s);
    }
    return w;
}

Diagram to_disc(const TriangularDiagram& td) {
    const Diagram& d = td.diagram;
    const int a = td.corner_a(), x = td.corner_x(), y = td.corner_y();
    if (min_cut_weight(d, a, x) != Weight{0, 0} || min_cut_weight(d, a, y) != Weight{0, 0})
        throw std::invalid_argument("a side of the triangle has nonzero weight");
    // Marks on the sides would be lost track of; clockwise the order is A, X, Y.
    const int k = d.slot_count();
    for (int s = y; s != x; s = (s + 1) % k) {
        if (s == a) continue;
        if (d.slot(s).is_mark) throw std::invalid_argument("a side of the triangle carries marks");
    }
    return normalized_disc(d, a);
}

std::optional<std::string> output_check(const Diagram& d) {
    auto v = validate(d, false);
    if (!v.ok) return v.problems.front();
    if (!is_nonpositive(d)) return std::string("an internal face has fewer than six sides");
    if (!isoperimetric_check(d)) return std::string("too many internal vertices for the boundary");
    return std::nullopt;
}

namespace {

std::uint64_t word_count(int n) {
    std::uint64_t t = 1;
    for (int i = 0; i < n; ++i) t *= 7;
    return t;
}

struct SweepItem {
    std::uint64_t index;
    std::string encoding;
    std::optional<std::string> failure;
};

SweepItem check_word(std::uint64_t index, int n) {
    SweepItem it{index, {}, std::nullopt};
    const Word w = word_from_index(index, n);
    try {
        const auto td = word_to_diagram(w);
        it.encoding = canonical_encoding(td.diagram);
        if (auto bad = output_check(td.diagram)) {
            it.failure = *bad;
            return it;
        }
        const Word back = diagram_to_word(td);
        if (back != w) it.failure = "came back as " + format_word(back);
    } catch (const std::exception& e) {
        it.failure = e.what();
    }
    return it;
}

// Runs f over items[begin..end) split into contiguous chunks.
template <class F>
void parallel_chunks(std::size_t count, int jobs, F f) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        f(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t step = (count + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        const std::size_t b = std::min(count, j * step), e = std::min(count, b + step);
        pool.emplace_back([&f, b, e] { f(b, e); });
    }
    for (auto& t : pool) t.join();
}

} // namespace

RoundtripReport roundtrip_report(int n, const RoundtripOptions& opt) {
    if (n < 0) throw std::invalid_argument("negative length");
    const std::uint64_t total = word_count(n);
    std::vector<std::uint64_t> indices;
    if (opt.exhaustive) {
        if (total > kDefaultEnumerationBudget) throw BudgetExceeded("exhaustive sweep over 7^" + std::to_string(n) + " words");
        indices.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) indices[i] = i;
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        std::unordered_set<std::uint64_t> seen;
        const std::uint64_t want = std::min(opt.sample, total);
        while (seen.size() < want) {
            const auto i = pick(rng);
            if (seen.insert(i).second) indices.push_back(i);
        }
        std::sort(indices.begin(), indices.end());
    }

    std::vector<SweepItem> items(indices.size());
    parallel_chunks(indices.size(), opt.jobs, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) items[i] = check_word(indices[i], n);
    });

    RoundtripReport r;
    r.n = n;
    r.tested = items.size();
    std::map<std::string, std::uint64_t> first_with;
    for (const auto& it : items) {
        if (it.failure) {
            r.failures.push_back({word_from_index(it.index, n), *it.failure});
        } else {
            ++r.passed;
        }
        if (it.encoding.empty()) continue;
        auto [pos, fresh] = first_with.emplace(it.encoding, it.index);
        if (!fresh) r.collisions.push_back({word_from_index(pos->second, n), word_from_index(it.index, n)});
    }
    return r;
}

std::vector<Diagram> closed_diagrams(int n, int jobs) {
    const auto walks = enumerate_walks(DominantWeight{0, 0}, n, DominantWeight{0, 0});
    std::vector<Diagram> out(walks.size());
    parallel_chunks(walks.size(), jobs, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[i] = to_disc(word_to_diagram(walks[i].word()));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Brute force. A diagram is split at the edge leaving its first mark: either
// that edge is an arc to another mark, cutting the disc in two, or it ends at
// a vertex whose two other edges become the first two marks of a smaller
// problem with one vertex less. Internal faces only ever disappear under
// these splits, so non-positivity can be imposed on every piece.

namespace {

struct Raw {
    std::vector<std::array<int, 3>> verts;
    std::vector<int> alpha;
    std::vector<int> marks;  // clockwise
};

Diagram to_diagram(const Raw& r) {
    std::vector<std::vector<int>> verts;
    for (const auto& v : r.verts) verts.push_back({v[0], v[1], v[2]});
    std::vector<Slot> slots;
    for (int m : r.marks) {
        slots.push_back(Slot::gap());
        slots.push_back(Slot::mark(m));
    }
    if (slots.empty()) slots.push_back(Slot::gap());
    return Diagram(std::move(verts), r.alpha, std::vector<EdgeKind>(r.alpha.size(), EdgeKind::ordinary), std::move(slots));
}

void append(Raw& into, const Raw& part) {
    const int off = static_cast<int>(into.alpha.size());
    for (int a : part.alpha) into.alpha.push_back(a + off);
    for (auto v : part.verts) into.verts.push_back({v[0] + off, v[1] + off, v[2] + off});
}

class Generator {
public:
    const std::vector<Raw>& get(int n, int v) {
        auto key = std::make_pair(n, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<Raw> found;
        std::set<std::string> seen;
        auto keep = [&](Raw r) {
            const Diagram d = to_diagram(r);
            if (!validate(d, false).ok || !is_nonpositive(d)) return;
            if (seen.insert(canonical_encoding(d)).second) found.push_back(std::move(r));
        };
        if (n == 0) {
            if (v == 0) found.push_back(Raw{});
        } else {
            // First mark joined to mark k.
            for (int k = 1; k < n; ++k)
                for (int v1 = 0; v1 <= v; ++v1) {
                    const auto& inner = get(k - 1, v1);
                    if (inner.empty()) continue;
                    const auto& outer = get(n - k - 1, v - v1);
                    for (const auto& in : inner)
                        for (const auto& out : outer) {
                            Raw r;
                            r.alpha = {1, 0};
                            r.marks.push_back(0);
                            append(r, in);
                            for (int m : in.marks) r.marks.push_back(m + 2);
                            r.marks.push_back(1);
                            const int off = static_cast<int>(r.alpha.size());
                            append(r, out);
                            for (int m : out.marks) r.marks.push_back(m + off);
                            keep(std::move(r));
                        }
                }
            // First mark joined to a vertex.
            if (v > 0) {
                const auto& children = get(n + 1, v - 1);
                for (const auto& c : children) {
                    Raw r = c;
                    const int p = static_cast<int>(r.alpha.size()), f = p + 1;
                    r.alpha.push_back(f);
                    r.alpha.push_back(p);
                    r.verts.push_back({f, c.marks[0], c.marks[1]});
                    r.marks = {p};
                    r.marks.insert(r.marks.end(), c.marks.begin() + 2, c.marks.end());
                    keep(std::move(r));
                }
            }
        }
        return memo_.emplace(key, std::move(found)).first->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Raw>> memo_;
};

} // namespace

std::vector<Diagram> brute_force_diagrams(int n, int max_n) {
    if (n < 0) throw std::invalid_argument("negative boundary size");
    if (n > max_n) throw BudgetExceeded("brute force beyond " + std::to_string(max_n) + " boundary points");
    Generator g;
    std::vector<std::pair<std::string, Diagram>> all;
    for (int v = 0; v <= isoperimetric_vertex_bound(n); ++v)
        for (const auto& r : g.get(n, v)) {
            Diagram d = to_diagram(r);
            all.emplace_back(canonical_encoding(d), std::move(d));
        }
    std::sort(all.begin(), all.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<Diagram> out;
    for (auto& [e, d] : all) out.push_back(std::move(d));
    return out;
}

Irreducibility irreducibility_probe(const TriangularDiagram& td) {
    const Diagram& d = td.diagram;
    const bool unique = min_cut_multiplicity(d, td.corner_a(), td.corner_x()) == 1 &&
                        min_cut_multiplicity(d, td.corner_a(), td.corner_y()) == 1;
    return unique ? Irreducibility::certificate : Irreducibility::inconclusive;
}

} // namespace g2web
