#pragma once

#include "g2web/planar_map.hpp"
#include "g2web/weights.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2web {

/// resolve_doubles(assemble(w)).
TriangularDiagram word_to_diagram(const Word& w);

class NotAStep : public std::runtime_error {
public:
    NotAStep(int position, Weight difference);
    int position;  // 1-based letter index
    Weight difference;
};

/// Differences of the weight profile. Throws NotAStep when one of them is not
/// in the step set.
Word diagram_to_word(const TriangularDiagram& td);

/// Forgets the corners of a triangular diagram whose two sides weigh (0,0).
/// The result is a normalized disc whose gap 0 is the former corner A.
/// Throws std::invalid_argument otherwise.
Diagram to_disc(const TriangularDiagram& td);

struct RoundtripOptions {
    bool exhaustive = true;
    std::uint64_t sample = 0;  // distinct words drawn when not exhaustive
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct RoundtripFailure {
    Word word;
    std::string reason;
};

struct RoundtripReport {
    int n = 0;
    std::uint64_t tested = 0;
    std::uint64_t passed = 0;
    std::vector<RoundtripFailure> failures;        // sorted by word
    std::vector<std::pair<Word, Word>> collisions;  // words sharing an encoding
    bool ok() const { return failures.empty() && collisions.empty(); }
};

/// Checks diagram_to_word(word_to_diagram(w)) == w, the validators, and that
/// the tested words have pairwise distinct canonical encodings. Sampled words
/// come from a 64-bit Mersenne Twister seeded with `seed`; the result does
/// not depend on `jobs`.
RoundtripReport roundtrip_report(int n, const RoundtripOptions& opt);

/// The diagrams of the closed walks of length n, as discs, in walk order.
std::vector<Diagram> closed_diagrams(int n, int jobs = 1);

/// Every valid non-positive disc diagram with n boundary points, built
/// without the bijection; sorted by canonical encoding. Throws
/// BudgetExceeded for n > max_n.
std::vector<Diagram> brute_force_diagrams(int n, int max_n = 6);

enum class Irreducibility { certificate, inconclusive };

/// A certificate when both sides are the unique minimal cut paths between
/// their corners. Never claims reducibility.
Irreducibility irreducibility_probe(const TriangularDiagram& td);

/// Validity, trivalence without double edges, non-positivity and the
/// isoperimetric bound. Returns the first failure.
std::optional<std::string> output_check(const Diagram& d);

} // namespace g2web
