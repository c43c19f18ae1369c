#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2web {

/// A point of the rank-two weight lattice. Also used for cut-path weights and
/// for Laurent exponents, which live on the same lattice.
struct Weight {
    int a = 0;
    int b = 0;

    constexpr Weight() = default;
    constexpr Weight(int a_, int b_) : a(a_), b(b_) {}

    constexpr Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
    constexpr Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
    constexpr Weight operator-() const { return {-a, -b}; }
    constexpr Weight& operator+=(Weight o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    constexpr Weight& operator-=(Weight o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }

    // Lexicographic (a, b); used for container ordering only, not the cut order.
    constexpr auto operator<=>(const Weight&) const = default;
};

std::ostream& operator<<(std::ostream& os, Weight w);
std::string to_string(Weight w);

/// Parses "a,b" (optionally parenthesised).
std::optional<Weight> parse_weight(std::string_view text);

constexpr bool is_dominant(Weight w) { return w.a >= 0 && w.b >= 0; }

/// Linear functional ranking cut weights: an ordinary crossing costs 2, a
/// contained edge or double crossing costs 3.
constexpr int height(Weight w) { return 3 * w.a + 2 * w.b; }

/// Total order used for minimal cut paths: height first, then a.
constexpr std::strong_ordering cut_order_cmp(Weight u, Weight v) {
    if (auto c = height(u) <=> height(v); c != 0) return c;
    return u.a <=> v.a;
}

struct CutOrderLess {
    constexpr bool operator()(Weight u, Weight v) const { return cut_order_cmp(u, v) < 0; }
};

/// Componentwise max(w, 0).
constexpr Weight clamp_nonneg(Weight w) { return {w.a > 0 ? w.a : 0, w.b > 0 ? w.b : 0}; }

/// Weight that is known to be non-negative in both coordinates.
class DominantWeight {
public:
    constexpr DominantWeight() = default;
    explicit DominantWeight(Weight w) : w_(w) {
        if (!is_dominant(w)) throw std::invalid_argument("weight is not dominant: " + to_string(w));
    }
    constexpr DominantWeight(int a, int b) : w_(a, b) {
        if (a < 0 || b < 0) throw std::invalid_argument("weight is not dominant");
    }

    static std::optional<DominantWeight> of(Weight w) {
        if (!is_dominant(w)) return std::nullopt;
        return DominantWeight(w);
    }

    constexpr Weight weight() const { return w_; }
    constexpr int a() const { return w_.a; }
    constexpr int b() const { return w_.b; }
    constexpr operator Weight() const { return w_; }
    constexpr auto operator<=>(const DominantWeight&) const = default;

private:
    Weight w_{};
};

/// The seven steps, in canonical token order.
enum class Step : std::uint8_t { a = 0, b, c, z, C, B, A };

inline constexpr std::array<Step, 7> kAllSteps = {Step::a, Step::b, Step::c, Step::z,
                                                  Step::C, Step::B, Step::A};

inline constexpr std::array<Weight, 7> kStepWeights = {
    Weight{0, 1}, Weight{1, -1}, Weight{-1, 2}, Weight{0, 0},
    Weight{1, -2}, Weight{-1, 1}, Weight{0, -1},
};

inline constexpr std::array<char, 7> kStepTokens = {'a', 'b', 'c', 'z', 'C', 'B', 'A'};

/// The step set in canonical token order.
std::span<const Weight, 7> step_set();

constexpr Weight step_weight(Step s) { return kStepWeights[static_cast<std::size_t>(s)]; }
constexpr char step_token(Step s) { return kStepTokens[static_cast<std::size_t>(s)]; }
constexpr int step_index(Step s) { return static_cast<int>(s); }

std::optional<Step> step_from_token(char c);
std::optional<Step> step_from_weight(Weight w);

/// The step with the opposite weight.
Step negate(Step s);

/// A word over the step alphabet. No dominance constraint.
using Word = std::vector<Step>;

/// Tokens separated by single spaces, e.g. "a b B A".
std::string format_word(const Word& w);

/// Accepts tokens with or without whitespace between them. Throws
/// std::invalid_argument on an unknown token.
Word parse_word(std::string_view text);

/// Mixed-radix index of a word (letter 0 most significant). Enumerating
/// indices 0..7^n-1 visits words in canonical lexicographic order.
Word word_from_index(std::uint64_t index, int length);

} // namespace g2web

template <>
struct std::hash<g2web::Weight> {
    std::size_t operator()(const g2web::Weight& w) const noexcept {
        return std::hash<long long>{}((static_cast<long long>(w.a) << 32) ^ static_cast<unsigned>(w.b));
    }
};
