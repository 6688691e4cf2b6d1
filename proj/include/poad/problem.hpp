#pragma once

// On-disk approximation problems:
//   {"basis": ["P1", ...], "catalog": "patterns.pdl", "corpus": "contexts/",
//    "targets": ["t1.concept", ...],
//    "embedding": {"kind": "complexity-scalar" | "anchor-profile", "anchors": [...]},
//    "threshold": 0.15}
// Relative paths resolve against the directory holding the JSON file.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "poad/approx.hpp"
#include "poad/catalog.hpp"

namespace poad::cli {

struct ProblemFile {
    approx::ProblemSpec spec;
    std::vector<std::string> basis_names;
    std::optional<double> threshold;
};

/// Throws Error(InvalidProblem) for malformed JSON, missing fields or an
/// unparsable catalog; UnknownPattern, MalformedConcept and MalformedContext
/// propagate from the referenced files.
ProblemFile load_problem(const std::filesystem::path& json_path);

/// Whole file as bytes. Throws Error(InvalidProblem) if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Parses a catalog file; on error diagnostics throws Error(MalformedPattern)
/// carrying the first formatted diagnostic.
Catalog load_catalog(const std::filesystem::path& path);

}  // namespace poad::cli
