#pragma once

// The pattern definition language.
//
//   catalog := { pattern } ;
//   pattern := "pattern" IDENT "{" { element } "}" ;
//   element := "participant" IDENT ["*" INT]
//            | "relation" KIND IDENT "->" IDENT ["*" INT]
//            | "role" IDENT "=" IDENT ["*" INT]
//            | "slot" IDENT ["*" INT] ;
//   KIND    := "inherits" | "associates" | "delegates" | "creates" ;
//   IDENT   := [A-Za-z_][A-Za-z0-9_<>=+]* ;
//   INT     := non-zero signed decimal (default 1)
//
// One element per line; "#" starts a comment. An empty pattern may be written
// "pattern P { }" on one line.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poad/algebra.hpp"

namespace poad::cli {

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::size_t line = 0;
    std::size_t column = 0;
    std::string code;  ///< e.g. "UnknownKeyword"
    std::string message;
};

/// "<source>:<line>:<column>: <severity>: <code>: <message>"
std::string format_diagnostic(const Diagnostic& d, std::string_view source);

struct Catalog {
    std::map<std::string, algebra::PatternGraph> patterns;
    std::string source_path;

    /// Throws Error(UnknownPattern) naming the missing pattern.
    const algebra::PatternGraph& at(const std::string& name) const;
};

struct ParseOutcome {
    std::optional<Catalog> catalog;  ///< present iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept { return catalog.has_value(); }
};

/// Total: never throws on any byte input.
ParseOutcome parse_catalog(std::string_view text, std::string source_path = "<input>");

/// Renders a graph back into the definition language. Names must be IDENTs.
std::string to_pdl(const algebra::PatternGraph& p);
std::string to_pdl(const Catalog& catalog);

}  // namespace poad::cli
