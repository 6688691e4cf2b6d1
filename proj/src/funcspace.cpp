#include "poad/funcspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "poad/error.hpp"

namespace poad::funcspace {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

void require_nonempty(const ContextCorpus& corpus) {
    if (corpus.empty()) throw Error(ErrorKind::EmptyCorpus, "the context corpus has no records");
}

}  // namespace

ContextRecord parse_context_record(std::string_view text, std::string source_id) {
    ContextRecord record;
    record.source_id = std::move(source_id);
    std::size_t line_no = 0;
    for (const auto raw : split_lines(text)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto fail = [&](const std::string& why) {
            return Error(ErrorKind::MalformedContext,
                         record.source_id + ":" + std::to_string(line_no) + ": " + why);
        };
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw fail("expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw fail("empty key");
        if (!record.bindings.emplace(std::string(key), std::string(trim(line.substr(eq + 1)))).second)
            throw fail("key '" + std::string(key) + "' bound twice");
    }
    return record;
}

ContextCorpus load_corpus(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
    ContextCorpus corpus;
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        corpus.push_back(parse_context_record(text.str(), file.filename().string()));
    }
    return corpus;
}

PatternFunction::PatternFunction(algebra::PatternGraph graph) : graph_(std::move(graph)) {
    for (const auto& [slot, m] : graph_.slots) slots_.insert(slot);
}

PatternFunction::PatternFunction(algebra::PatternGraph graph, std::set<std::string> declared_slots)
    : PatternFunction(std::move(graph)) {
    if (declared_slots != slots_)
        throw Error(ErrorKind::InvalidFunction, "declared slots differ from the slots of pattern " + graph_.name);
}

algebra::PatternGraph instantiate(const PatternFunction& f, const ContextRecord& ctx) {
    for (const auto& slot : f.slots()) {
        if (!ctx.bindings.contains(slot))
            throw Error(ErrorKind::MissingBinding,
                        "context '" + ctx.source_id + "' does not bind slot '" + slot + "'");
    }
    if (f.slots().empty()) return f.graph();

    // Single left-to-right scan, so substituted values are never re-expanded.
    auto substitute = [&](const std::string& name) {
        std::string out;
        std::size_t pos = 0;
        while (pos < name.size()) {
            const auto open = name.find('<', pos);
            if (open == std::string::npos) break;
            const auto close = name.find('>', open + 1);
            if (close == std::string::npos) break;
            const std::string slot = name.substr(open + 1, close - open - 1);
            out.append(name, pos, open - pos);
            if (f.slots().contains(slot)) {
                out += ctx.bindings.at(slot);
                pos = close + 1;
            } else {
                out += '<';
                pos = open + 1;
            }
        }
        out.append(name, pos);
        return out;
    };

    const auto& g = f.graph();
    algebra::PatternGraph out;
    out.name = g.name;
    out.slots = g.slots;
    for (const auto& [name, m] : g.participants) out.participants.add(substitute(name), m);
    for (const auto& [rel, m] : g.relations)
        out.relations.add(algebra::Relation{rel.kind, substitute(rel.from), substitute(rel.to)}, m);
    for (const auto& [role, m] : g.roles) out.roles.add(algebra::RoleAssignment{role.role, substitute(role.target)}, m);
    return out;
}

concepts::Concept apply(const PatternFunction& f, const ContextRecord& ctx) {
    return concepts::Concept::singleton(algebra::canonical_serialize(instantiate(f, ctx)));
}

std::vector<Bytes> outputs(const PatternFunction& f, const ContextCorpus& corpus) {
    std::vector<Bytes> out;
    out.reserve(corpus.size());
    for (const auto& ctx : corpus) out.push_back(concepts::serialize_concept(apply(f, ctx)));
    return out;
}

double pattern_distance(const PatternFunction& f, const PatternFunction& g, const ContextCorpus& corpus) {
    require_nonempty(corpus);
    const auto fo = outputs(f, corpus);
    const auto go = outputs(g, corpus);
    double total = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) total += static_cast<double>(infodist::mu(fo[i], go[i]));
    return total / static_cast<double>(corpus.size());
}

double info_norm(const PatternFunction& f, const ContextCorpus& corpus) {
    require_nonempty(corpus);
    double total = 0.0;
    for (const auto& out : outputs(f, corpus)) total += static_cast<double>(infodist::khat(out));
    return total;
}

Complexity BehaviorTrace::complexity() const {
    Bytes all;
    for (const auto& d : deltas) all += d.edit_script;
    return infodist::khat(all);
}

Bytes line_diff(std::string_view before, std::string_view after) {
    const auto a = split_lines(before);
    const auto b = split_lines(after);
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    // lcs[i][j] = LCS length of a[i..] and b[j..]
    std::vector<std::vector<std::size_t>> lcs(n + 1, std::vector<std::size_t>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = m; j-- > 0;)
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

    Bytes script;
    auto emit = [&](char sign, std::size_t line, std::string_view text) {
        script += sign;
        script += ' ';
        script += std::to_string(line);
        script += ' ';
        script += text;
        script += '\n';
    };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && a[i] == b[j]) {
            ++i;
            ++j;
        } else if (j == m || (i < n && lcs[i + 1][j] >= lcs[i][j + 1])) {
            emit('-', i + 1, a[i]);
            ++i;
        } else {
            emit('+', j + 1, b[j]);
            ++j;
        }
    }
    return script;
}

BehaviorTrace behavior(const PatternFunction& f, const ContextCorpus& corpus) {
    if (corpus.size() < 2) throw Error(ErrorKind::CorpusTooSmall, "behavior needs at least two context records");
    const auto outs = outputs(f, corpus);
    BehaviorTrace trace;
    for (std::size_t i = 0; i + 1 < outs.size(); ++i)
        trace.deltas.push_back(BehaviorDelta{i, i + 1, line_diff(outs[i], outs[i + 1])});
    return trace;
}

}  // namespace poad::funcspace
