#include "poad/concepts.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "poad/error.hpp"

namespace poad::concepts {

namespace {

constexpr double kSumTolerance = 1e-9;
// Half a unit in the ninth decimal, per member.
constexpr double kQuantumHalf = 5e-10;

}  // namespace

Concept::Concept(std::vector<Member> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorKind::InvalidConcept, "a concept needs at least one member");
    std::sort(members_.begin(), members_.end(),
              [](const Member& a, const Member& b) { return a.text < b.text; });
    double sum = 0.0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const double w = members_[i].weight;
        if (!(w > 0.0 && w <= 1.0))
            throw Error(ErrorKind::InvalidConcept, "member weight outside (0, 1]: " + format_weight(w));
        if (i > 0 && members_[i].text == members_[i - 1].text)
            throw Error(ErrorKind::InvalidConcept, "duplicate member string");
        sum += w;
    }
    const double tolerance = kSumTolerance + kQuantumHalf * static_cast<double>(members_.size());
    if (std::abs(sum - 1.0) > tolerance)
        throw Error(ErrorKind::InvalidConcept, "weights sum to " + std::to_string(sum) + ", not 1");
}

Concept Concept::singleton(Bytes text) { return Concept({Member{std::move(text), 1.0}}); }

double avg_length(const Concept& c) {
    double total = 0.0;
    for (const auto& m : c.members()) total += m.weight * static_cast<double>(m.text.size());
    return total;
}

std::string format_weight(double weight) {
    // glibc printf rounds the exact binary value; exact decimal ties go to even.
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.9f", weight);
    return std::string(buf, static_cast<std::size_t>(n));
}

Bytes serialize_concept(const Concept& c) {
    Bytes out;
    for (const auto& m : c.members()) {
        out += "w ";
        out += format_weight(m.weight);
        out += ' ';
        out += std::to_string(m.text.size());
        out += ' ';
        out += m.text;
        out += '\n';
    }
    return out;
}

Concept parse_concept(std::string_view text) {
    auto fail = [](const std::string& why) { return Error(ErrorKind::MalformedConcept, why); };
    std::vector<Member> members;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text.substr(pos, 2) != "w ") throw fail("member line must start with 'w '");
        pos += 2;
        const auto space = text.find(' ', pos);
        if (space == std::string_view::npos) throw fail("missing byte length");
        const auto weight_text = text.substr(pos, space - pos);
        double weight = 0.0;
        const auto [wend, werr] = std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
        if (werr != std::errc{} || wend != weight_text.data() + weight_text.size()) throw fail("bad weight");
        pos = space + 1;
        const auto space2 = text.find(' ', pos);
        if (space2 == std::string_view::npos) throw fail("missing member bytes");
        const auto len_text = text.substr(pos, space2 - pos);
        std::size_t length = 0;
        const auto [lend, lerr] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), length);
        if (lerr != std::errc{} || lend != len_text.data() + len_text.size() || len_text.empty()) throw fail("bad byte length");
        pos = space2 + 1;
        if (text.size() - pos < length + 1) throw fail("member bytes truncated");
        if (text[pos + length] != '\n') throw fail("member line not terminated by LF");
        members.push_back(Member{Bytes(text.substr(pos, length)), weight});
        pos += length + 1;
    }
    if (members.empty()) throw fail("no members");
    for (const auto& m : members)
        if (!(m.weight > 0.0)) throw fail("non-positive weight");
    try {
        return Concept(std::move(members));
    } catch (const Error& e) {
        throw fail(e.what());
    }
}

Complexity concept_distance(const Concept& a, const Concept& b) {
    return infodist::mu(serialize_concept(a), serialize_concept(b));
}

}  // namespace poad::concepts
