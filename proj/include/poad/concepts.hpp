#pragma once

// A concept is a finite, normalized mixture of byte strings. Each member's
// weight says how well that string typifies the concept.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poad/infodist.hpp"

namespace poad::concepts {

using infodist::Bytes;
using infodist::Complexity;

struct Member {
    Bytes text;
    double weight = 0.0;

    bool operator==(const Member&) const = default;
};

class Concept {
public:
    /// Validates: at least one member, weights in (0, 1] summing to 1
    /// within 1e-9, member strings pairwise distinct.
    /// Throws Error(InvalidConcept).
    explicit Concept(std::vector<Member> members);

    static Concept singleton(Bytes text);

    /// Members sorted by string bytes ascending.
    const std::vector<Member>& members() const noexcept { return members_; }

    bool operator==(const Concept&) const = default;

private:
    std::vector<Member> members_;
};

/// Sum of weight * byte length.
double avg_length(const Concept& c);

/// Weight rendered with exactly nine decimals, round-half-even.
std::string format_weight(double weight);

/// One line per member, sorted by bytes:
///   "w <weight> <byte-length> <raw bytes>\n"
Bytes serialize_concept(const Concept& c);

/// Inverse of serialize_concept. The nine-decimal weights are renormalized
/// after parsing, so the sum tolerance is widened by the quantization step.
/// Throws Error(MalformedConcept).
Concept parse_concept(std::string_view text);

Complexity concept_distance(const Concept& a, const Concept& b);

}  // namespace poad::concepts
