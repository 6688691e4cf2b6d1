#pragma once

// Pattern graphs and the composition algebra over them.
//
// Every element of a graph (participant, relation, role assignment, slot)
// carries a signed, non-zero multiplicity. Stringing adds multiplicities
// pointwise, which makes (PatternGraph, string_patterns) an abelian group:
// the empty graph is the identity and anti() is the inverse. Negative
// multiplicities only arise from algebra and describe no real design.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poad/infodist.hpp"

namespace poad::algebra {

using infodist::Bytes;
using Multiplicity = std::int64_t;

/// The reserved empty participant. Merging with it leaves the other side's
/// name untouched.
inline constexpr std::string_view kEmptyParticipant = "_";

/// Declaration order is the canonical (alphabetical) sort order.
enum class RelationKind { Associates, Creates, Delegates, Inherits };

std::string_view to_string(RelationKind kind) noexcept;
bool parse_relation_kind(std::string_view text, RelationKind& out) noexcept;

struct Relation {
    RelationKind kind;
    std::string from;
    std::string to;

    auto operator<=>(const Relation&) const = default;
};

struct RoleAssignment {
    std::string role;
    std::string target;

    auto operator<=>(const RoleAssignment&) const = default;
};

/// Map from key to non-zero signed count. Entries reaching zero are erased.
template <typename Key>
class SignedMultiset {
public:
    using Storage = std::map<Key, Multiplicity>;

    void add(const Key& key, Multiplicity delta) {
        if (delta == 0) return;
        auto [it, inserted] = items_.try_emplace(key, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) items_.erase(it);
        }
    }

    Multiplicity count(const Key& key) const {
        const auto it = items_.find(key);
        return it == items_.end() ? 0 : it->second;
    }

    bool contains(const Key& key) const { return items_.contains(key); }
    void erase(const Key& key) { items_.erase(key); }
    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    void merge_from(const SignedMultiset& other, Multiplicity factor = 1) {
        for (const auto& [key, m] : other.items_) add(key, m * factor);
    }

    void scale(Multiplicity factor) {
        if (factor == 0) {
            items_.clear();
            return;
        }
        for (auto& [key, m] : items_) m *= factor;
    }

    bool operator==(const SignedMultiset&) const = default;

private:
    Storage items_;
};

struct PatternGraph {
    std::string name;
    SignedMultiset<std::string> participants;
    SignedMultiset<Relation> relations;
    SignedMultiset<RoleAssignment> roles;
    SignedMultiset<std::string> slots;

    /// True for the null pattern (no elements at all; the name is ignored).
    bool is_null() const noexcept {
        return participants.empty() && relations.empty() && roles.empty() && slots.empty();
    }

    bool operator==(const PatternGraph&) const = default;
};

/// Equality of everything except the name. The algebraic laws are stated in
/// these terms, since composed names record how a graph was built.
bool same_structure(const PatternGraph& a, const PatternGraph& b);

/// Human-readable reasons a graph violates the declared-endpoint invariants:
/// relation endpoints and role targets must be participants (or "_").
/// Cancellation in the algebra may legitimately produce such graphs.
std::vector<std::string> invariant_violations(const PatternGraph& p);

/// Pairs (participant of the left operand, participant of the right operand).
struct Binding {
    std::vector<std::pair<std::string, std::string>> pairs;
};

PatternGraph null_pattern(std::string name = {});
/// One positive empty participant "_".
PatternGraph unit_pattern(std::string name = "Unit");

/// Pointwise sum of multiplicities. The name is the sorted "+"-join of the
/// operands' name components; null operands contribute no name.
PatternGraph string_patterns(const PatternGraph& p, const PatternGraph& q);
PatternGraph anti(const PatternGraph& p);
PatternGraph scale(const PatternGraph& p, Multiplicity k);

/// Strings p and q, then merges each bound pair into one participant named
/// by the sorted "="-join of the two names, with the larger multiplicity.
/// Relations and roles are retargeted and coinciding entries summed.
/// Throws UnknownParticipant, NegativeMerge, InvalidBinding.
PatternGraph overlap(const PatternGraph& p, const PatternGraph& q, const Binding& b);

/// Sum of absolute participant and relation multiplicities.
std::uint64_t structural_norm(const PatternGraph& p);

/// "pattern <name>" then participants, relations, roles, slots, each sorted.
/// Roles and slots print " * <m>" only when m != 1.
Bytes canonical_serialize(const PatternGraph& p);
/// canonical_serialize without the leading "pattern" line.
Bytes canonical_body(const PatternGraph& p);
/// Inverse of canonical_serialize. Throws MalformedPattern.
PatternGraph parse_canonical(std::string_view text);

}  // namespace poad::algebra
