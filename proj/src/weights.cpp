#include "g2web/weights.hpp"

#include <charconv>
#include <sstream>

namespace g2web {

std::ostream& operator<<(std::ostream& os, Weight w) { return os << '(' << w.a << ',' << w.b << ')'; }

std::string to_string(Weight w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

std::optional<Weight> parse_weight(std::string_view text) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    auto comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto parse_int = [](std::string_view s, int& out) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        if (s.empty()) return false;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && p == s.data() + s.size();
    };
    Weight w;
    if (!parse_int(text.substr(0, comma), w.a) || !parse_int(text.substr(comma + 1), w.b)) return std::nullopt;
    return w;
}

std::span<const Weight, 7> step_set() { return std::span<const Weight, 7>(kStepWeights); }

std::optional<Step> step_from_token(char c) {
    for (Step s : kAllSteps)
        if (step_token(s) == c) return s;
    return std::nullopt;
}

std::optional<Step> step_from_weight(Weight w) {
    for (Step s : kAllSteps)
        if (step_weight(s) == w) return s;
    return std::nullopt;
}

Step negate(Step s) { return *step_from_weight(-step_weight(s)); }

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += step_token(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == ',' || c == '\n') continue;
        auto s = step_from_token(c);
        if (!s) throw std::invalid_argument(std::string("unknown step token '") + c + "'");
        w.push_back(*s);
    }
    return w;
}

Word word_from_index(std::uint64_t index, int length) {
    Word w(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = kAllSteps[index % 7];
        index /= 7;
    }
    return w;
}

} // namespace g2web
