#pragma once

// Patterns as functions from context records to structure concepts, and the
// measurements taken over a finite, ordered context corpus: pattern distance
// (mean information distance), information norm (total complexity), and the
// discrete behavior trace.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "poad/algebra.hpp"
#include "poad/concepts.hpp"

namespace poad::funcspace {

using infodist::Bytes;
using infodist::Complexity;

struct ContextRecord {
    std::map<std::string, std::string> bindings;
    std::string source_id;
};

using ContextCorpus = std::vector<ContextRecord>;

/// "key = value" lines; '#' comment lines and blank lines are skipped.
/// Throws MalformedContext on a line without '=', an empty key or a repeated key.
ContextRecord parse_context_record(std::string_view text, std::string source_id);

/// Every regular file in dir, ordered by file name (byte-wise).
ContextCorpus load_corpus(const std::filesystem::path& dir);

class PatternFunction {
public:
    explicit PatternFunction(algebra::PatternGraph graph);
    /// Throws InvalidFunction when declared_slots differs from the graph's slots.
    PatternFunction(algebra::PatternGraph graph, std::set<std::string> declared_slots);

    const algebra::PatternGraph& graph() const noexcept { return graph_; }
    const std::set<std::string>& slots() const noexcept { return slots_; }

private:
    algebra::PatternGraph graph_;
    std::set<std::string> slots_;
};

/// Replaces every "<slot>" inside participant identifiers (declarations,
/// relation endpoints, role targets) by the bound value. Throws MissingBinding.
algebra::PatternGraph instantiate(const PatternFunction& f, const ContextRecord& ctx);

/// Singleton concept holding the canonical serialization of the instantiated graph.
concepts::Concept apply(const PatternFunction& f, const ContextRecord& ctx);

/// serialize_concept(apply(f, ctx)) for every record, in corpus order.
std::vector<Bytes> outputs(const PatternFunction& f, const ContextCorpus& corpus);

/// Mean over the corpus of mu between the two serialized outputs.
/// Throws EmptyCorpus, MissingBinding.
double pattern_distance(const PatternFunction& f, const PatternFunction& g, const ContextCorpus& corpus);

/// Sum over the corpus of khat of the serialized output.
/// Throws EmptyCorpus, MissingBinding.
double info_norm(const PatternFunction& f, const ContextCorpus& corpus);

struct BehaviorDelta {
    std::size_t from_index = 0;
    std::size_t to_index = 0;
    Bytes edit_script;
};

struct BehaviorTrace {
    std::vector<BehaviorDelta> deltas;

    /// khat of all edit scripts concatenated.
    Complexity complexity() const;
};

/// Line diff by longest common subsequence. Lines are "- <old-line> <text>"
/// and "+ <new-line> <text>" (1-based), each LF-terminated, in script order.
/// Ties prefer deletion first.
Bytes line_diff(std::string_view before, std::string_view after);

/// Consecutive-record differences of the outputs. Throws CorpusTooSmall, MissingBinding.
BehaviorTrace behavior(const PatternFunction& f, const ContextCorpus& corpus);

}  // namespace poad::funcspace
