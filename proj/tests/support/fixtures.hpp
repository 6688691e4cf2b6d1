#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "poad/algebra.hpp"
#include "poad/catalog.hpp"
#include "poad/funcspace.hpp"
#include "poad/problem.hpp"

namespace poad::testing {

inline std::filesystem::path fixture_path(const std::string& relative) {
    return std::filesystem::path(POAD_FIXTURES) / relative;
}

inline const cli::Catalog& fixture_catalog() {
    static const cli::Catalog catalog = cli::load_catalog(fixture_path("patterns.pdl"));
    return catalog;
}

inline const funcspace::ContextCorpus& fixture_corpus() {
    static const funcspace::ContextCorpus corpus = funcspace::load_corpus(fixture_path("contexts"));
    return corpus;
}

/// Canonical serializations of every fixture pattern instantiated on every
/// fixture context, plus the uninstantiated templates.
inline std::vector<std::string> fixture_serializations() {
    std::vector<std::string> out;
    for (const auto& [name, p] : fixture_catalog().patterns) {
        out.push_back(algebra::canonical_serialize(p));
        const funcspace::PatternFunction f(p);
        for (const auto& ctx : fixture_corpus()) out.push_back(algebra::canonical_serialize(funcspace::instantiate(f, ctx)));
    }
    return out;
}

struct GraphShape {
    std::string prefix;            ///< prepended to every participant name
    int participant_pool = 6;      ///< names drawn from prefix + "P0".."P<pool-1>"
    bool allow_negative = true;
    bool roles_and_slots = true;
};

inline algebra::Multiplicity random_multiplicity(std::mt19937_64& rng, bool allow_negative) {
    std::uniform_int_distribution<int> d(1, 3);
    const int m = d(rng);
    if (allow_negative && std::bernoulli_distribution(0.3)(rng)) return -m;
    return m;
}

/// Random graph satisfying the declared-endpoint invariants.
inline algebra::PatternGraph random_graph(std::mt19937_64& rng, const GraphShape& shape, std::string name = "R") {
    using namespace algebra;
    PatternGraph g;
    g.name = std::move(name);
    std::uniform_int_distribution<int> pick(0, shape.participant_pool - 1);
    std::uniform_int_distribution<int> count(1, shape.participant_pool);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const auto who = shape.prefix + "P" + std::to_string(pick(rng));
        if (!g.participants.contains(who)) g.participants.add(who, random_multiplicity(rng, shape.allow_negative));
    }
    std::vector<std::string> names;
    for (const auto& [who, m] : g.participants) names.push_back(who);
    std::uniform_int_distribution<std::size_t> which(0, names.size() - 1);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> rel_count(0, 6);
    for (int i = rel_count(rng); i > 0; --i) {
        Relation r{static_cast<RelationKind>(kind(rng)), names[which(rng)], names[which(rng)]};
        if (!g.relations.contains(r)) g.relations.add(r, random_multiplicity(rng, shape.allow_negative));
    }
    if (shape.roles_and_slots) {
        std::uniform_int_distribution<int> small(0, 2);
        for (int i = small(rng); i > 0; --i) {
            RoleAssignment role{"Role" + std::to_string(small(rng)), names[which(rng)]};
            if (!g.roles.contains(role)) g.roles.add(role, random_multiplicity(rng, shape.allow_negative));
        }
        for (int i = small(rng); i > 0; --i) {
            const auto slot = "s" + std::to_string(small(rng));
            if (!g.slots.contains(slot)) g.slots.add(slot, random_multiplicity(rng, shape.allow_negative));
        }
    }
    return g;
}

inline std::string random_identifier(std::mt19937_64& rng, std::size_t n) {
    static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    std::uniform_int_distribution<std::size_t> d(0, sizeof kAlphabet - 2);
    std::string s(1, kAlphabet[d(rng) % 52]);
    while (s.size() < n) s += kAlphabet[d(rng)];
    return s;
}

/// Slot-free pattern whose participant and role names are random identifiers,
/// so two of them share no participants and little text.
inline algebra::PatternGraph random_named_pattern(std::mt19937_64& rng, int participants = 5) {
    using namespace algebra;
    PatternGraph g;
    g.name = random_identifier(rng, 10);
    std::vector<std::string> names;
    for (int i = 0; i < participants; ++i) {
        names.push_back(random_identifier(rng, 14));
        g.participants.add(names.back(), 1);
    }
    std::uniform_int_distribution<int> kind(0, 3);
    for (int i = 1; i < participants; ++i)
        g.relations.add(Relation{static_cast<RelationKind>(kind(rng)), names[i], names[i - 1]}, 1);
    g.roles.add(RoleAssignment{random_identifier(rng, 8), names.front()}, 1);
    return g;
}

/// Brute-force LZ78B reference: phrase table as a plain list of strings,
/// searched linearly. Independent of the trie-based implementation.
inline std::string naive_lz78b(const std::string& input) {
    std::vector<std::string> phrases{""};
    std::string out;
    auto leb = [&](std::size_t v) {
        do {
            unsigned char b = v & 0x7f;
            v >>= 7;
            if (v) b |= 0x80;
            out.push_back(static_cast<char>(b));
        } while (v);
    };
    std::size_t pos = 0;
    while (pos < input.size()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < phrases.size(); ++i) {
            const auto& ph = phrases[i];
            if (ph.size() > phrases[best].size() && input.compare(pos, ph.size(), ph) == 0 &&
                pos + ph.size() <= input.size())
                best = i;
        }
        const std::size_t len = phrases[best].size();
        leb(best);
        if (pos + len == input.size()) break;
        out.push_back(input[pos + len]);
        phrases.push_back(input.substr(pos, len + 1));
        pos += len + 1;
    }
    return out;
}

inline std::string random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> byte(0, 255);
    std::string s(n, '\0');
    for (auto& c : s) c = static_cast<char>(byte(rng));
    return s;
}

}  // namespace poad::testing
