#include "poad/problem.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "poad/error.hpp"

namespace poad::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidProblem, "cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Catalog load_catalog(const fs::path& path) {
    auto outcome = parse_catalog(read_file(path), path.string());
    if (!outcome.ok()) {
        for (const auto& d : outcome.diagnostics)
            if (d.severity == Severity::Error)
                throw Error(ErrorKind::MalformedPattern, format_diagnostic(d, path.string()));
    }
    return std::move(*outcome.catalog);
}

ProblemFile load_problem(const fs::path& json_path) {
    const fs::path base = json_path.parent_path();
    auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::InvalidProblem, json_path.string() + ": " + why);
    };

    json doc;
    try {
        doc = json::parse(read_file(json_path));
    } catch (const json::exception& e) {
        throw fail(e.what());
    }
    if (!doc.is_object()) throw fail("top level must be an object");

    ProblemFile file;
    try {
        for (const char* key : {"basis", "catalog", "corpus", "targets", "embedding"})
            if (!doc.contains(key)) throw fail(std::string("missing field '") + key + "'");

        const Catalog catalog = load_catalog(resolve(doc.at("catalog").get<std::string>()));
        for (const auto& name : doc.at("basis")) {
            file.basis_names.push_back(name.get<std::string>());
            file.spec.basis.emplace_back(catalog.at(file.basis_names.back()));
        }
        file.spec.contexts = funcspace::load_corpus(resolve(doc.at("corpus").get<std::string>()));
        for (const auto& target : doc.at("targets"))
            file.spec.targets.push_back(concepts::parse_concept(read_file(resolve(target.get<std::string>()))));

        const auto& embedding = doc.at("embedding");
        const auto kind = embedding.at("kind").get<std::string>();
        if (kind == "complexity-scalar") {
            file.spec.embedding.kind = approx::EmbeddingKind::ComplexityScalar;
        } else if (kind == "anchor-profile") {
            file.spec.embedding.kind = approx::EmbeddingKind::AnchorProfile;
            for (const auto& anchor : embedding.value("anchors", json::array()))
                file.spec.embedding.anchors.push_back(
                    concepts::parse_concept(read_file(resolve(anchor.get<std::string>()))));
        } else {
            throw fail("unknown embedding kind '" + kind + "'");
        }
        if (doc.contains("threshold")) file.threshold = doc.at("threshold").get<double>();
    } catch (const json::exception& e) {
        throw fail(e.what());
    } catch (const fs::filesystem_error& e) {
        throw fail(e.what());
    }
    try {
        approx::validate(file.spec);
    } catch (const Error& e) {
        throw fail(e.what());
    }
    return file;
}

}  // namespace poad::cli
