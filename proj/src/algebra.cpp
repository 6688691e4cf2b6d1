#include "poad/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "poad/error.hpp"

namespace poad::algebra {

namespace {

std::vector<std::string> name_components(const PatternGraph& p) {
    std::vector<std::string> parts;
    if (p.is_null()) return parts;
    std::size_t start = 0;
    while (start <= p.name.size()) {
        const auto plus = p.name.find('+', start);
        const auto end = plus == std::string::npos ? p.name.size() : plus;
        if (end > start) parts.push_back(p.name.substr(start, end - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return parts;
}

std::string composed_name(const PatternGraph& p, const PatternGraph& q) {
    // NULL on both sides keeps the left name so NULL + NULL stays NULL byte for byte.
    if (p.is_null() && q.is_null()) return p.name;
    auto parts = name_components(p);
    auto more = name_components(q);
    parts.insert(parts.end(), more.begin(), more.end());
    std::sort(parts.begin(), parts.end());
    std::string name;
    for (const auto& part : parts) {
        if (!name.empty()) name += '+';
        name += part;
    }
    return name;
}

std::string multiplicity_suffix(Multiplicity m) { return " * " + std::to_string(m); }

}  // namespace

std::string_view to_string(RelationKind kind) noexcept {
    switch (kind) {
        case RelationKind::Associates: return "associates";
        case RelationKind::Creates: return "creates";
        case RelationKind::Delegates: return "delegates";
        case RelationKind::Inherits: return "inherits";
    }
    return "associates";
}

bool parse_relation_kind(std::string_view text, RelationKind& out) noexcept {
    for (auto kind : {RelationKind::Associates, RelationKind::Creates, RelationKind::Delegates,
                      RelationKind::Inherits}) {
        if (text == to_string(kind)) {
            out = kind;
            return true;
        }
    }
    return false;
}

bool same_structure(const PatternGraph& a, const PatternGraph& b) {
    return a.participants == b.participants && a.relations == b.relations && a.roles == b.roles &&
           a.slots == b.slots;
}

std::vector<std::string> invariant_violations(const PatternGraph& p) {
    std::vector<std::string> problems;
    auto declared = [&](const std::string& who) {
        return who == kEmptyParticipant || p.participants.contains(who);
    };
    for (const auto& [rel, m] : p.relations) {
        if (!declared(rel.from)) problems.push_back("relation source '" + rel.from + "' is not a participant");
        if (!declared(rel.to)) problems.push_back("relation target '" + rel.to + "' is not a participant");
    }
    for (const auto& [role, m] : p.roles) {
        if (!declared(role.target))
            problems.push_back("role '" + role.role + "' targets unknown participant '" + role.target + "'");
    }
    return problems;
}

PatternGraph null_pattern(std::string name) {
    PatternGraph p;
    p.name = std::move(name);
    return p;
}

PatternGraph unit_pattern(std::string name) {
    PatternGraph p;
    p.name = std::move(name);
    p.participants.add(std::string(kEmptyParticipant), 1);
    return p;
}

PatternGraph string_patterns(const PatternGraph& p, const PatternGraph& q) {
    PatternGraph out = p;
    out.name = composed_name(p, q);
    out.participants.merge_from(q.participants);
    out.relations.merge_from(q.relations);
    out.roles.merge_from(q.roles);
    out.slots.merge_from(q.slots);
    return out;
}

PatternGraph anti(const PatternGraph& p) { return scale(p, -1); }

PatternGraph scale(const PatternGraph& p, Multiplicity k) {
    PatternGraph out = p;
    out.participants.scale(k);
    out.relations.scale(k);
    out.roles.scale(k);
    out.slots.scale(k);
    return out;
}

PatternGraph overlap(const PatternGraph& p, const PatternGraph& q, const Binding& b) {
    std::set<std::string> seen;
    for (const auto& [left, right] : b.pairs) {
        if (left == right)
            throw Error(ErrorKind::InvalidBinding, "participant '" + left + "' bound to itself");
        for (const auto* side : {&left, &right}) {
            if (!seen.insert(*side).second)
                throw Error(ErrorKind::InvalidBinding, "participant '" + *side + "' appears in two pairs");
        }
        if (!p.participants.contains(left))
            throw Error(ErrorKind::UnknownParticipant, "'" + left + "' is not a participant of " + p.name);
        if (!q.participants.contains(right))
            throw Error(ErrorKind::UnknownParticipant, "'" + right + "' is not a participant of " + q.name);
        if (p.participants.count(left) < 0 || q.participants.count(right) < 0)
            throw Error(ErrorKind::NegativeMerge, "cannot overlap anti-participants " + left + " and " + right);
    }

    PatternGraph out = string_patterns(p, q);
    std::map<std::string, std::string> rename;
    SignedMultiset<std::string> merged;
    for (const auto& [left, right] : b.pairs) {
        const Multiplicity ml = out.participants.count(left);
        const Multiplicity mr = out.participants.count(right);
        if (ml <= 0 || mr <= 0)
            throw Error(ErrorKind::NegativeMerge, "stringing cancelled " + (ml <= 0 ? left : right));
        out.participants.erase(left);
        out.participants.erase(right);
        const Multiplicity m = std::max(ml, mr);
        if (left == kEmptyParticipant || right == kEmptyParticipant) {
            merged.add(left == kEmptyParticipant ? right : left, m);
            continue;
        }
        const std::string name = std::min(left, right) + "=" + std::max(left, right);
        merged.add(name, m);
        rename[left] = name;
        rename[right] = name;
    }
    out.participants.merge_from(merged);
    if (rename.empty()) return out;

    auto retarget = [&](const std::string& who) {
        const auto it = rename.find(who);
        return it == rename.end() ? who : it->second;
    };
    SignedMultiset<Relation> relations;
    for (const auto& [rel, m] : out.relations)
        relations.add(Relation{rel.kind, retarget(rel.from), retarget(rel.to)}, m);
    SignedMultiset<RoleAssignment> roles;
    for (const auto& [role, m] : out.roles) roles.add(RoleAssignment{role.role, retarget(role.target)}, m);
    out.relations = std::move(relations);
    out.roles = std::move(roles);
    return out;
}

std::uint64_t structural_norm(const PatternGraph& p) {
    std::uint64_t total = 0;
    for (const auto& [name, m] : p.participants) total += static_cast<std::uint64_t>(m < 0 ? -m : m);
    for (const auto& [rel, m] : p.relations) total += static_cast<std::uint64_t>(m < 0 ? -m : m);
    return total;
}

Bytes canonical_body(const PatternGraph& p) {
    Bytes out;
    for (const auto& [name, m] : p.participants) out += "participant " + name + multiplicity_suffix(m) + "\n";
    for (const auto& [rel, m] : p.relations) {
        out += "relation ";
        out += to_string(rel.kind);
        out += " " + rel.from + " -> " + rel.to + multiplicity_suffix(m) + "\n";
    }
    for (const auto& [role, m] : p.roles)
        out += "role " + role.role + " = " + role.target + (m == 1 ? "" : multiplicity_suffix(m)) + "\n";
    for (const auto& [slot, m] : p.slots) out += "slot " + slot + (m == 1 ? "" : multiplicity_suffix(m)) + "\n";
    return out;
}

Bytes canonical_serialize(const PatternGraph& p) { return "pattern " + p.name + "\n" + canonical_body(p); }

PatternGraph parse_canonical(std::string_view text) {
    PatternGraph p;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::MalformedPattern, "line " + std::to_string(line_no) + ": " + why);
    };
    auto parse_mult = [&](std::string_view t) {
        Multiplicity m = 0;
        const auto [end, err] = std::from_chars(t.data(), t.data() + t.size(), m);
        if (err != std::errc{} || end != t.data() + t.size() || m == 0) throw fail("bad multiplicity");
        return m;
    };
    while (pos < text.size()) {
        ++line_no;
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) throw fail("missing final LF");
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        std::vector<std::string_view> tok;
        for (std::size_t i = 0; i <= line.size();) {
            const auto sp = std::min(line.find(' ', i), line.size());
            tok.push_back(line.substr(i, sp - i));
            i = sp + 1;
        }
        if (line_no == 1) {
            if (line.substr(0, 8) != "pattern ") throw fail("expected 'pattern <name>'");
            p.name = std::string(line.substr(8));
            continue;
        }
        // An optional trailing "* m" for roles and slots.
        auto tail_mult = [&](std::size_t base) -> Multiplicity {
            if (tok.size() == base) return 1;
            if (tok.size() == base + 2 && tok[base] == "*") return parse_mult(tok[base + 1]);
            throw fail("unexpected tokens");
        };
        if (tok[0] == "participant" && tok.size() == 4 && tok[2] == "*") {
            if (p.participants.contains(std::string(tok[1]))) throw fail("duplicate participant");
            p.participants.add(std::string(tok[1]), parse_mult(tok[3]));
        } else if (tok[0] == "relation" && tok.size() == 7 && tok[3] == "->" && tok[5] == "*") {
            Relation rel{};
            if (!parse_relation_kind(tok[1], rel.kind)) throw fail("unknown relation kind");
            rel.from = std::string(tok[2]);
            rel.to = std::string(tok[4]);
            if (p.relations.contains(rel)) throw fail("duplicate relation");
            p.relations.add(rel, parse_mult(tok[6]));
        } else if (tok[0] == "role" && tok.size() >= 4 && tok[2] == "=") {
            RoleAssignment role{std::string(tok[1]), std::string(tok[3])};
            if (p.roles.contains(role)) throw fail("duplicate role");
            p.roles.add(role, tail_mult(4));
        } else if (tok[0] == "slot" && tok.size() >= 2) {
            if (p.slots.contains(std::string(tok[1]))) throw fail("duplicate slot");
            p.slots.add(std::string(tok[1]), tail_mult(2));
        } else {
            throw fail("unrecognized line");
        }
    }
    if (line_no == 0) throw fail("empty input");
    return p;
}

}  // namespace poad::algebra
