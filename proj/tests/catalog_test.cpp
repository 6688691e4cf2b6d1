#include "poad/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"

namespace poad::cli {
namespace {

std::vector<std::string> codes(const ParseOutcome& o) {
    std::vector<std::string> out;
    for (const auto& d : o.diagnostics) out.push_back(d.code);
    return out;
}

TEST(ParseCatalog, MinimalPattern) {
    const auto o = parse_catalog("pattern P {\n participant A\n}");
    ASSERT_TRUE(o.ok());
    EXPECT_TRUE(o.diagnostics.empty());
    const auto& p = o.catalog->at("P");
    EXPECT_EQ(p.participants.size(), 1u);
    EXPECT_EQ(p.participants.count("A"), 1);
}

TEST(ParseCatalog, FullElementSet) {
    const auto o = parse_catalog(
        "# header\n"
        "pattern P {  # trailing comment\n"
        "  participant A * 2\n"
        "  participant B*-1\n"
        "  relation creates A -> B * +3\n"
        "  relation inherits A -> _\n"
        "  role Maker = A\n"
        "  slot item\n"
        "}\n"
        "pattern Empty { }\n");
    ASSERT_TRUE(o.ok()) << format_diagnostic(o.diagnostics.at(0), "t");
    const auto& p = o.catalog->at("P");
    EXPECT_EQ(p.participants.count("A"), 2);
    EXPECT_EQ(p.participants.count("B"), -1);
    EXPECT_EQ(p.relations.count({algebra::RelationKind::Creates, "A", "B"}), 3);
    EXPECT_EQ(p.relations.count({algebra::RelationKind::Inherits, "A", "_"}), 1);
    EXPECT_EQ(p.roles.count({"Maker", "A"}), 1);
    EXPECT_EQ(p.slots.count("item"), 1);
    EXPECT_TRUE(o.catalog->at("Empty").is_null());
    ASSERT_EQ(o.diagnostics.size(), 1u);
    EXPECT_EQ(o.diagnostics[0].severity, Severity::Warning);
    EXPECT_EQ(o.diagnostics[0].code, "NegativeMultiplicity");
    EXPECT_EQ(o.diagnostics[0].line, 4u);
}

TEST(ParseCatalog, UnknownKeyword) {
    const auto o = parse_catalog("pattern P {\n widget A\n}");
    EXPECT_FALSE(o.ok());
    ASSERT_EQ(o.diagnostics.size(), 1u);
    EXPECT_EQ(o.diagnostics[0].severity, Severity::Error);
    EXPECT_EQ(o.diagnostics[0].line, 2u);
    EXPECT_EQ(o.diagnostics[0].column, 2u);
    EXPECT_EQ(o.diagnostics[0].code, "UnknownKeyword");
}

TEST(ParseCatalog, DuplicateParticipant) {
    const auto o = parse_catalog("pattern P {\n participant A\n participant A\n}");
    EXPECT_EQ(codes(o), std::vector<std::string>{"DuplicateParticipant"});
    EXPECT_EQ(o.diagnostics[0].line, 3u);
}

TEST(ParseCatalog, DanglingRelationAndRole) {
    const auto o = parse_catalog("pattern P {\n participant A\n relation associates A -> B\n role R = C\n}");
    EXPECT_EQ(codes(o), (std::vector<std::string>{"DanglingRelation", "DanglingRole"}));
    EXPECT_EQ(o.diagnostics[0].line, 3u);
    EXPECT_EQ(o.diagnostics[0].column, 27u);
}

TEST(ParseCatalog, ForwardReferencesAreFine) {
    EXPECT_TRUE(parse_catalog("pattern P {\n relation associates A -> B\n participant A\n participant B\n}").ok());
}

TEST(ParseCatalog, DuplicatePattern) {
    const auto o = parse_catalog("pattern P { }\npattern P { }\n");
    EXPECT_EQ(codes(o), std::vector<std::string>{"DuplicatePattern"});
    EXPECT_EQ(o.diagnostics[0].line, 2u);
}

TEST(ParseCatalog, BadMultiplicity) {
    EXPECT_EQ(codes(parse_catalog("pattern P {\n participant A * 0\n}")), std::vector<std::string>{"BadMultiplicity"});
    EXPECT_EQ(codes(parse_catalog("pattern P {\n participant A * x\n}")), std::vector<std::string>{"BadMultiplicity"});
    EXPECT_EQ(codes(parse_catalog("pattern P {\n participant A * 99999999999999999999\n}")),
              std::vector<std::string>{"BadMultiplicity"});
}

TEST(ParseCatalog, OneErrorPerLineAllLinesReported) {
    const auto o = parse_catalog("pattern P {\n widget A B C\n participant\n participant A ? \n}\n}\n");
    EXPECT_EQ(codes(o), (std::vector<std::string>{"UnknownKeyword", "UnexpectedEndOfLine", "BadCharacter", "UnexpectedToken"}));
    std::vector<std::size_t> lines;
    for (const auto& d : o.diagnostics) lines.push_back(d.line);
    EXPECT_EQ(lines, (std::vector<std::size_t>{2, 3, 4, 6}));
}

TEST(ParseCatalog, UnterminatedPattern) {
    EXPECT_EQ(codes(parse_catalog("pattern P {\n participant A\n")), std::vector<std::string>{"UnterminatedPattern"});
}

TEST(ParseCatalog, UnknownRelationKind) {
    EXPECT_EQ(codes(parse_catalog("pattern P {\n participant A\n relation owns A -> A\n}")),
              std::vector<std::string>{"UnknownRelationKind"});
}

TEST(ParseCatalog, DiagnosticFormat) {
    const Diagnostic d{Severity::Error, 2, 5, "UnknownKeyword", "unknown keyword 'widget'"};
    EXPECT_EQ(format_diagnostic(d, "cat.pdl"), "cat.pdl:2:5: error: UnknownKeyword: unknown keyword 'widget'");
}

TEST(ParseCatalog, FixtureCatalogIsClean) {
    const auto o = parse_catalog(read_file(poad::testing::fixture_path("patterns.pdl")));
    ASSERT_TRUE(o.ok());
    EXPECT_TRUE(o.diagnostics.empty());
    EXPECT_EQ(o.catalog->patterns.size(), 8u);
}

TEST(ParseCatalog, PdlRoundTrip) {
    std::mt19937_64 rng(12);
    Catalog catalog;
    for (int i = 0; i < 100; ++i) {
        auto g = poad::testing::random_graph(rng, poad::testing::GraphShape{}, "R" + std::to_string(i));
        catalog.patterns.emplace(g.name, g);
    }
    for (const auto& [name, p] : poad::testing::fixture_catalog().patterns) catalog.patterns.emplace(name, p);
    const auto o = parse_catalog(to_pdl(catalog));
    ASSERT_TRUE(o.ok());
    EXPECT_EQ(o.catalog->patterns, catalog.patterns);
}

TEST(ParseCatalog, TotalOnRandomBytes) {
    std::mt19937_64 rng(13);
    const std::string alphabet = "pattern participant relation role slot {}*->=_#\n ABab<>+-019";
    for (int i = 0; i < 2000; ++i) {
        std::string text;
        const auto n = rng() % 200;
        for (std::size_t k = 0; k < n; ++k)
            text += (rng() % 2) ? alphabet[rng() % alphabet.size()] : static_cast<char>(rng() % 256);
        const auto o = parse_catalog(text);
        EXPECT_EQ(o.ok(), std::none_of(o.diagnostics.begin(), o.diagnostics.end(),
                                       [](const Diagnostic& d) { return d.severity == Severity::Error; }));
    }
}

}  // namespace
}  // namespace poad::cli
