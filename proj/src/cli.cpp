#include "poad/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "poad/approx.hpp"
#include "poad/error.hpp"
#include "poad/funcspace.hpp"
#include "poad/problem.hpp"

namespace poad::cli {

namespace fs = std::filesystem;
using algebra::PatternGraph;
using nlohmann::json;

namespace {

bool is_input_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedConcept:
        case ErrorKind::MalformedContext:
        case ErrorKind::MalformedPattern:
        case ErrorKind::UnknownPattern:
        case ErrorKind::InvalidProblem:
        case ErrorKind::UnknownCompressor:
            return true;
        default:
            return false;
    }
}

void print_value(std::ostream& out, std::string_view label, double value) {
    out << fmt::format("{}\t{}\n", label, value);
}

void print_value(std::ostream& out, std::string_view label, std::uint64_t value) {
    out << label << '\t' << value << '\n';
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) parts.push_back(part);
    return parts;
}

// Participant names may themselves contain '=', so pick the first split
// point whose halves name participants of the two operands.
algebra::Binding parse_binding(const std::string& text, const PatternGraph& p, const PatternGraph& q) {
    algebra::Binding b;
    for (const auto& pair : split_commas(text)) {
        std::size_t chosen = pair.find('=');
        if (chosen == std::string::npos) throw Error(ErrorKind::InvalidProblem, "binding '" + pair + "' lacks '='");
        for (auto at = chosen; at != std::string::npos; at = pair.find('=', at + 1)) {
            if (p.participants.contains(pair.substr(0, at)) && q.participants.contains(pair.substr(at + 1))) {
                chosen = at;
                break;
            }
        }
        b.pairs.emplace_back(pair.substr(0, chosen), pair.substr(chosen + 1));
    }
    return b;
}

json to_json(const approx::ApproximationResult& r) {
    json doc;
    doc["coefficients"] = r.coefficients;
    doc["residuals"] = r.residuals;
    doc["minimax"] = r.minimax;
    doc["rank_deficient"] = r.rank_deficient;
    if (!r.steps.empty()) doc["steps"] = r.steps;
    return doc;
}

json to_json(const approx::CouplingReport& r) {
    json doc;
    doc["matrix"] = r.matrix;
    doc["shared_participants"] = r.shared_participants;
    doc["independent"] = r.independent;
    doc["threshold"] = r.threshold;
    return doc;
}

}  // namespace

std::vector<LawCheck> check_axioms(const Catalog& catalog) {
    using namespace algebra;
    std::vector<const PatternGraph*> ps;
    for (const auto& [name, p] : catalog.patterns) ps.push_back(&p);
    const PatternGraph zero = null_pattern();
    const std::vector<Multiplicity> scalars{-2, -1, 0, 1, 3};

    std::vector<LawCheck> checks;
    checks.reserve(9);  // references below must stay valid
    auto law = [&](std::string name) -> LawCheck& { return checks.emplace_back(LawCheck{std::move(name)}); };
    auto tally = [](LawCheck& c, bool ok) {
        ++c.cases;
        if (!ok) ++c.failures;
    };

    auto& comm = law("string_commutative");
    auto& assoc = law("string_associative");
    auto& ident = law("string_identity");
    auto& inverse = law("string_inverse");
    auto& one = law("scale_identity");
    auto& compat = law("scale_compatible");
    auto& dist_scalar = law("scale_distributes_over_scalars");
    auto& dist_pattern = law("scale_distributes_over_patterns");
    auto& unit = law("overlap_unit_identity");

    for (const auto* p : ps) {
        tally(ident, same_structure(string_patterns(*p, zero), *p) && string_patterns(*p, zero).name == p->name);
        tally(inverse, string_patterns(*p, anti(*p)).is_null());
        tally(one, same_structure(scale(*p, 1), *p));
        for (auto a : scalars) {
            for (auto b : scalars) {
                tally(compat, same_structure(scale(scale(*p, a), b), scale(*p, a * b)));
                tally(dist_scalar, same_structure(string_patterns(scale(*p, a), scale(*p, b)), scale(*p, a + b)));
            }
        }
        bool positive = !p->participants.contains(std::string(kEmptyParticipant));
        for (const auto& [name, m] : p->participants) positive = positive && m > 0;
        if (positive) {
            for (const auto& [name, m] : p->participants)
                tally(unit, same_structure(overlap(*p, unit_pattern(), Binding{{{name, std::string(kEmptyParticipant)}}}), *p));
        }
        for (const auto* q : ps) {
            tally(comm, same_structure(string_patterns(*p, *q), string_patterns(*q, *p)));
            for (auto a : scalars)
                tally(dist_pattern, same_structure(scale(string_patterns(*p, *q), a),
                                                   string_patterns(scale(*p, a), scale(*q, a))));
            for (const auto* r : ps)
                tally(assoc, same_structure(string_patterns(string_patterns(*p, *q), *r),
                                            string_patterns(*p, string_patterns(*q, *r))));
        }
    }
    return checks;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Information-theoretic analysis and composition of design patterns", "poad"};
    app.require_subcommand(1);

    std::string catalog_path, file_a, file_b, dir, corpus_dir, bind, solution, problem_path;
    std::string pattern_a, pattern_b;
    double threshold = approx::kDefaultCouplingThreshold;
    bool iterative = false;

    auto* validate = app.add_subcommand("validate", "parse a catalog and self-check the algebra laws");
    validate->add_option("catalog", catalog_path)->required();

    auto* complexity = app.add_subcommand("complexity", "compressed-length complexity of a file");
    complexity->add_option("file", file_a)->required();

    auto* distance = app.add_subcommand("distance", "information distance and NCD of two files");
    distance->add_option("a", file_a)->required();
    distance->add_option("b", file_b)->required();

    auto* matrix = app.add_subcommand("matrix", "pairwise information distances of a directory (TSV)");
    matrix->add_option("dir", dir)->required();

    auto* string_cmd = app.add_subcommand("string", "string two patterns together");
    string_cmd->add_option("catalog", catalog_path)->required();
    string_cmd->add_option("A", pattern_a)->required();
    string_cmd->add_option("B", pattern_b)->required();

    auto* overlap_cmd = app.add_subcommand("overlap", "overlap two patterns on bound participants");
    overlap_cmd->add_option("catalog", catalog_path)->required();
    overlap_cmd->add_option("A", pattern_a)->required();
    overlap_cmd->add_option("B", pattern_b)->required();
    overlap_cmd->add_option("--bind", bind, "a=c[,...]")->required();

    auto* norm = app.add_subcommand("norm", "information norm and structural norm of a pattern");
    norm->add_option("catalog", catalog_path)->required();
    norm->add_option("P", pattern_a)->required();
    norm->add_option("--corpus", corpus_dir)->required();

    auto* pdist = app.add_subcommand("pdist", "pattern distance over a corpus");
    pdist->add_option("catalog", catalog_path)->required();
    pdist->add_option("A", pattern_a)->required();
    pdist->add_option("B", pattern_b)->required();
    pdist->add_option("--corpus", corpus_dir)->required();

    auto* behavior_cmd = app.add_subcommand("behavior", "discrete behavior trace of a pattern");
    behavior_cmd->add_option("catalog", catalog_path)->required();
    behavior_cmd->add_option("P", pattern_a)->required();
    behavior_cmd->add_option("--corpus", corpus_dir)->required();

    auto* approx_cmd = app.add_subcommand("approx", "approximate a target by a pattern composition");
    approx_cmd->add_option("problem", problem_path)->required();
    approx_cmd->add_flag("--iterative", iterative, "recursive least squares, one context per step");

    auto* couple = app.add_subcommand("couple", "coupling and independence of solution patterns");
    couple->add_option("catalog", catalog_path)->required();
    couple->add_option("--solution", solution, "P1,P2,...")->required();
    couple->add_option("--corpus", corpus_dir)->required();
    couple->add_option("--threshold", threshold);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            auto outcome = parse_catalog(read_file(catalog_path), catalog_path);
            for (const auto& d : outcome.diagnostics) err << format_diagnostic(d, catalog_path) << '\n';
            if (!outcome.ok()) return kExitUsage;
            print_value(out, "patterns", static_cast<std::uint64_t>(outcome.catalog->patterns.size()));
            bool all_ok = true;
            for (const auto& check : check_axioms(*outcome.catalog)) {
                out << check.law << '\t' << (check.failures == 0 ? "ok" : "FAILED") << '\n';
                all_ok = all_ok && check.failures == 0;
            }
            return all_ok ? kExitOk : kExitComputation;
        }
        if (complexity->parsed()) {
            const auto bytes = read_file(file_a);
            print_value(out, "bytes", static_cast<std::uint64_t>(bytes.size()));
            print_value(out, "khat", static_cast<std::uint64_t>(infodist::khat(bytes)));
            return kExitOk;
        }
        if (distance->parsed()) {
            const auto a = read_file(file_a);
            const auto b = read_file(file_b);
            print_value(out, "mu", static_cast<std::uint64_t>(infodist::mu(a, b)));
            print_value(out, "ncd", infodist::ncd(a, b));
            return kExitOk;
        }
        if (matrix->parsed()) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
                return a.filename().string() < b.filename().string();
            });
            std::vector<std::string> contents;
            for (const auto& f : files) contents.push_back(read_file(f));
            for (const auto& f : files) out << '\t' << f.filename().string();
            out << '\n';
            for (std::size_t i = 0; i < files.size(); ++i) {
                out << files[i].filename().string();
                for (std::size_t j = 0; j < files.size(); ++j) out << '\t' << infodist::mu(contents[i], contents[j]);
                out << '\n';
            }
            return kExitOk;
        }
        if (string_cmd->parsed()) {
            const auto catalog = load_catalog(catalog_path);
            out << algebra::canonical_serialize(algebra::string_patterns(catalog.at(pattern_a), catalog.at(pattern_b)));
            return kExitOk;
        }
        if (overlap_cmd->parsed()) {
            const auto catalog = load_catalog(catalog_path);
            const auto& p = catalog.at(pattern_a);
            const auto& q = catalog.at(pattern_b);
            out << algebra::canonical_serialize(algebra::overlap(p, q, parse_binding(bind, p, q)));
            return kExitOk;
        }
        if (norm->parsed()) {
            const auto catalog = load_catalog(catalog_path);
            const funcspace::PatternFunction f(catalog.at(pattern_a));
            print_value(out, "info_norm", funcspace::info_norm(f, funcspace::load_corpus(corpus_dir)));
            print_value(out, "structural_norm", algebra::structural_norm(f.graph()));
            return kExitOk;
        }
        if (pdist->parsed()) {
            const auto catalog = load_catalog(catalog_path);
            const funcspace::PatternFunction f(catalog.at(pattern_a));
            const funcspace::PatternFunction g(catalog.at(pattern_b));
            print_value(out, "pattern_distance", funcspace::pattern_distance(f, g, funcspace::load_corpus(corpus_dir)));
            return kExitOk;
        }
        if (behavior_cmd->parsed()) {
            const auto catalog = load_catalog(catalog_path);
            const funcspace::PatternFunction f(catalog.at(pattern_a));
            const auto trace = funcspace::behavior(f, funcspace::load_corpus(corpus_dir));
            for (const auto& d : trace.deltas)
                print_value(out, fmt::format("delta_{}_{}", d.from_index, d.to_index),
                            static_cast<std::uint64_t>(infodist::khat(d.edit_script)));
            print_value(out, "behavior_complexity", static_cast<std::uint64_t>(trace.complexity()));
            return kExitOk;
        }
        if (approx_cmd->parsed()) {
            const auto problem = load_problem(problem_path);
            const auto result = iterative ? approx::solve_iterative(problem.spec) : approx::solve_direct(problem.spec);
            json report = to_json(result);
            report["solver"] = iterative ? "iterative" : "direct";
            report["basis"] = problem.basis_names;
            if (problem.threshold && problem.spec.basis.size() >= 2)
                report["coupling"] = to_json(approx::coupling_report(problem.spec.basis, problem.spec.contexts, *problem.threshold));
            out << report.dump(2) << '\n';
            return kExitOk;
        }
        if (couple->parsed()) {
            const auto catalog = load_catalog(catalog_path);
            std::vector<funcspace::PatternFunction> patterns;
            const auto names = split_commas(solution);
            for (const auto& name : names) patterns.emplace_back(catalog.at(name));
            json report = to_json(approx::coupling_report(patterns, funcspace::load_corpus(corpus_dir), threshold));
            report["patterns"] = names;
            out << report.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? kExitUsage : kExitComputation;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace poad::cli
