#include "poad/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "poad/error.hpp"
#include "support/fixtures.hpp"

namespace poad::algebra {
namespace {

using poad::testing::fixture_catalog;
using poad::testing::GraphShape;
using poad::testing::random_graph;

const PatternGraph& fixture(const std::string& name) { return fixture_catalog().at(name); }

ErrorKind kind_of(auto&& call) {
    try {
        call();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidProblem;
}

TEST(StringPatterns, NullIsIdentityIncludingName) {
    for (const auto& [name, p] : fixture_catalog().patterns) {
        const auto s = string_patterns(p, fixture("Null"));
        EXPECT_EQ(canonical_serialize(s), canonical_serialize(p)) << name;
    }
}

TEST(StringPatterns, AntiPatternCancels) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_graph(rng, GraphShape{});
        EXPECT_TRUE(string_patterns(p, anti(p)).is_null());
    }
}

TEST(StringPatterns, DisjointFixturesUniteParticipants) {
    const auto s = string_patterns(fixture("Observer"), fixture("Strategy"));
    EXPECT_EQ(fixture("Observer").participants.size(), 4u);
    EXPECT_EQ(fixture("Strategy").participants.size(), 3u);
    EXPECT_EQ(s.participants.size(), 7u);
    EXPECT_EQ(s.name, "Observer+Strategy");
}

TEST(StringPatterns, NameComponentsAreSorted) {
    const auto a = null_pattern("b");
    auto b = unit_pattern("a");
    auto c = unit_pattern("c");
    auto x = string_patterns(string_patterns(unit_pattern("b"), b), c);
    auto y = string_patterns(unit_pattern("b"), string_patterns(b, c));
    EXPECT_EQ(x.name, "a+b+c");
    EXPECT_EQ(y.name, x.name);
    EXPECT_EQ(string_patterns(a, b).name, "a");  // null operands contribute no name
}

TEST(StringPatterns, CommutativeAndAssociative) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_graph(rng, GraphShape{}, "p");
        const auto q = random_graph(rng, GraphShape{}, "q");
        const auto r = random_graph(rng, GraphShape{}, "r");
        EXPECT_EQ(string_patterns(p, q), string_patterns(q, p));
        EXPECT_EQ(string_patterns(string_patterns(p, q), r), string_patterns(p, string_patterns(q, r)));
    }
}

TEST(Anti, Involution) {
    EXPECT_TRUE(anti(null_pattern()).is_null());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_graph(rng, GraphShape{});
        EXPECT_EQ(anti(anti(p)), p);
    }
    PatternGraph p;
    p.participants.add("A", 2);
    EXPECT_EQ(anti(p).participants.count("A"), -2);
}

TEST(Scale, ScalarLaws) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> k(-4, 4);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_graph(rng, GraphShape{});
        const auto q = random_graph(rng, GraphShape{});
        const Multiplicity a = k(rng);
        const Multiplicity b = k(rng);
        EXPECT_EQ(scale(p, 1), p);
        EXPECT_TRUE(scale(p, 0).is_null());
        EXPECT_TRUE(same_structure(scale(scale(p, a), b), scale(p, a * b)));
        EXPECT_TRUE(same_structure(scale(string_patterns(p, q), a), string_patterns(scale(p, a), scale(q, a))));
        EXPECT_TRUE(same_structure(string_patterns(scale(p, a), scale(p, b)), scale(p, a + b)));
        EXPECT_EQ(structural_norm(scale(p, a)), static_cast<std::uint64_t>(a < 0 ? -a : a) * structural_norm(p));
    }
}

TEST(StructuralNorm, CountsMultiplicities) {
    EXPECT_EQ(structural_norm(null_pattern()), 0u);
    EXPECT_EQ(structural_norm(fixture("Observer")), 9u);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_graph(rng, GraphShape{});
        const auto q = random_graph(rng, GraphShape{});
        EXPECT_LE(structural_norm(string_patterns(p, q)), structural_norm(p) + structural_norm(q));
        EXPECT_GT(structural_norm(p), 0u);  // random graphs always have a participant
    }
}

TEST(Overlap, UnitIsIdentityForEveryParticipant) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_graph(rng, GraphShape{.allow_negative = false});
        for (const auto& [who, m] : p.participants)
            EXPECT_TRUE(same_structure(overlap(p, unit_pattern(), Binding{{{who, "_"}}}), p));
    }
}

TEST(Overlap, ObserverAndStrategyMakeMvc) {
    const auto mvc = overlap(fixture("Observer"), fixture("Strategy"), Binding{{{"AbstractSubject", "AbstractStrategy"}}});
    EXPECT_EQ(canonical_body(mvc), canonical_body(fixture("MVC")));
    EXPECT_EQ(canonical_serialize(mvc), poad::cli::read_file(poad::testing::fixture_path("mvc.canonical")));
}

TEST(Overlap, MergedParticipantCarriesBothPatternsRelations) {
    const auto& obs = fixture("Observer");
    const auto& str = fixture("Strategy");
    const auto mvc = overlap(obs, str, Binding{{{"AbstractSubject", "AbstractStrategy"}}});
    const std::string merged = "AbstractStrategy=AbstractSubject";
    ASSERT_TRUE(mvc.participants.contains(merged));
    bool from_observer = false;
    bool from_strategy = false;
    for (const auto& [rel, m] : mvc.relations) {
        if (rel.from == merged && rel.to == "AbstractObserver") from_observer = true;
        if (rel.from == "Context<controller>" && rel.to == merged) from_strategy = true;
    }
    EXPECT_TRUE(from_observer);
    EXPECT_TRUE(from_strategy);
    const auto k = infodist::khat(canonical_serialize(mvc));
    EXPECT_NE(k, infodist::khat(canonical_serialize(obs)));
    EXPECT_NE(k, infodist::khat(canonical_serialize(str)));
}

TEST(Overlap, MergedMultiplicityIsMax) {
    PatternGraph p;
    p.participants.add("A", 3);
    PatternGraph q;
    q.participants.add("B", 1);
    q.relations.add(Relation{RelationKind::Creates, "B", "B"}, 1);
    const auto r = overlap(p, q, Binding{{{"A", "B"}}});
    EXPECT_EQ(r.participants.count("A=B"), 3);
    EXPECT_EQ(r.relations.count(Relation{RelationKind::Creates, "A=B", "A=B"}), 1);
}

TEST(Overlap, CoincidingRelationsSum) {
    PatternGraph p;
    p.participants.add("A", 1);
    p.participants.add("X", 1);
    p.relations.add(Relation{RelationKind::Associates, "X", "A"}, 1);
    PatternGraph q;
    q.participants.add("B", 1);
    q.participants.add("X", 1);
    q.relations.add(Relation{RelationKind::Associates, "X", "B"}, 2);
    const auto r = overlap(p, q, Binding{{{"A", "B"}}});
    EXPECT_EQ(r.relations.count(Relation{RelationKind::Associates, "X", "A=B"}), 3);
}

TEST(Overlap, Errors) {
    const auto& obs = fixture("Observer");
    const auto& str = fixture("Strategy");
    EXPECT_EQ(kind_of([&] { overlap(obs, str, Binding{{{"AbstractSubject", "Missing"}}}); }), ErrorKind::UnknownParticipant);
    EXPECT_EQ(kind_of([&] { overlap(obs, str, Binding{{{"Missing", "AbstractStrategy"}}}); }), ErrorKind::UnknownParticipant);
    EXPECT_EQ(kind_of([&] { overlap(anti(obs), str, Binding{{{"AbstractSubject", "AbstractStrategy"}}}); }),
              ErrorKind::NegativeMerge);
    EXPECT_EQ(kind_of([&] {
                  overlap(obs, str, Binding{{{"AbstractSubject", "AbstractStrategy"}, {"AbstractSubject", "Context<controller>"}}});
              }),
              ErrorKind::InvalidBinding);
}

TEST(Canonical, NullSerializesAsHeaderOnly) {
    EXPECT_EQ(canonical_serialize(null_pattern("Empty")), "pattern Empty\n");
}

TEST(Canonical, IndependentOfConstructionOrder) {
    PatternGraph a;
    a.name = "X";
    a.participants.add("B", 1);
    a.participants.add("A", 2);
    a.slots.add("s", 1);
    PatternGraph b;
    b.name = "X";
    b.slots.add("s", 1);
    b.participants.add("A", 2);
    b.participants.add("B", 1);
    EXPECT_EQ(canonical_serialize(a), canonical_serialize(b));
    EXPECT_EQ(canonical_serialize(a), "pattern X\nparticipant A * 2\nparticipant B * 1\nslot s\n");
}

TEST(Canonical, RoundTripsRandomGraphs) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_graph(rng, GraphShape{}, "R" + std::to_string(i));
        EXPECT_EQ(parse_canonical(canonical_serialize(p)), p);
    }
    for (const auto& [name, p] : fixture_catalog().patterns) EXPECT_EQ(parse_canonical(canonical_serialize(p)), p);
}

TEST(Canonical, RejectsGarbage) {
    EXPECT_THROW(parse_canonical(""), Error);
    EXPECT_THROW(parse_canonical("pattern X\nparticipant A\n"), Error);
    EXPECT_THROW(parse_canonical("pattern X\nrelation owns A -> B * 1\n"), Error);
    EXPECT_THROW(parse_canonical("pattern X\nparticipant A * 0\n"), Error);
}

TEST(Invariants, CancellationCanLeaveDanglingEndpoints) {
    PatternGraph p;
    p.participants.add("A", 1);
    p.participants.add("B", 1);
    p.relations.add(Relation{RelationKind::Inherits, "A", "B"}, 1);
    PatternGraph q;
    q.participants.add("B", -1);
    EXPECT_TRUE(invariant_violations(p).empty());
    EXPECT_EQ(invariant_violations(string_patterns(p, q)).size(), 1u);
}

}  // namespace
}  // namespace poad::algebra
