#include "poad/catalog.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "poad/error.hpp"

namespace poad::cli {

namespace {

using algebra::Multiplicity;
using algebra::PatternGraph;
using algebra::Relation;
using algebra::RelationKind;
using algebra::RoleAssignment;

enum class Tok { Ident, Int, Arrow, Star, Equals, LBrace, RBrace, Bad };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '<' || c == '>' || c == '=' || c == '+';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        const std::size_t start = i;
        Tok kind = Tok::Bad;
        if (ident_start(c)) {
            while (i < line.size() && ident_char(line[i])) ++i;
            kind = Tok::Ident;
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            i += 2;
            kind = Tok::Arrow;
        } else if (digit(c) || ((c == '-' || c == '+') && i + 1 < line.size() && digit(line[i + 1]))) {
            ++i;
            while (i < line.size() && digit(line[i])) ++i;
            kind = Tok::Int;
        } else {
            ++i;
            switch (c) {
                case '*': kind = Tok::Star; break;
                case '=': kind = Tok::Equals; break;
                case '{': kind = Tok::LBrace; break;
                case '}': kind = Tok::RBrace; break;
                default: kind = Tok::Bad; break;
            }
        }
        out.push_back(Token{kind, line.substr(start, i - start), start + 1});
    }
    return out;
}

struct LineError {
    std::size_t column;
    std::string code;
    std::string message;
};

// Element lines awaiting the end-of-pattern endpoint check.
struct PendingRef {
    std::size_t line;
    std::size_t column;
    std::string name;
    bool is_role;
};

class Parser {
public:
    explicit Parser(std::string source) { catalog_.source_path = std::move(source); }

    ParseOutcome run(std::string_view text) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            const auto end = nl == std::string_view::npos ? text.size() : nl;
            ++line_no_;
            parse_line(text.substr(pos, end - pos));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (open_) {
            error(header_line_, 1, "UnterminatedPattern", "pattern '" + current_.name + "' is missing '}'");
            close_pattern();
        }
        ParseOutcome outcome;
        bool failed = false;
        for (const auto& d : diagnostics_) failed = failed || d.severity == Severity::Error;
        if (!failed) outcome.catalog = std::move(catalog_);
        outcome.diagnostics = std::move(diagnostics_);
        return outcome;
    }

private:
    void error(std::size_t line, std::size_t column, std::string code, std::string message) {
        diagnostics_.push_back(Diagnostic{Severity::Error, line, column, std::move(code), std::move(message)});
    }
    void warning(std::size_t line, std::size_t column, std::string code, std::string message) {
        diagnostics_.push_back(Diagnostic{Severity::Warning, line, column, std::move(code), std::move(message)});
    }

    void parse_line(std::string_view line) {
        const auto toks = lex(line);
        if (toks.empty()) return;
        std::optional<LineError> failure = open_ ? element(toks) : header(toks);
        if (failure) error(line_no_, failure->column, failure->code, failure->message);
    }

    static LineError unexpected(const Token& t, std::string_view wanted) {
        return LineError{t.column, t.kind == Tok::Bad ? "BadCharacter" : "UnexpectedToken",
                         "expected " + std::string(wanted) + ", found '" + std::string(t.text) + "'"};
    }
    static LineError missing(const std::vector<Token>& t, std::string_view wanted) {
        const auto& last = t.back();
        return LineError{last.column + last.text.size(), "UnexpectedEndOfLine", "expected " + std::string(wanted)};
    }

    std::optional<LineError> header(const std::vector<Token>& t) {
        if (t[0].kind != Tok::Ident) return unexpected(t[0], "'pattern'");
        if (t[0].text != "pattern")
            return LineError{t[0].column, "UnknownKeyword", "unknown keyword '" + std::string(t[0].text) + "'"};
        if (t.size() < 2) return missing(t, "pattern name");
        if (t[1].kind != Tok::Ident) return unexpected(t[1], "pattern name");
        if (t.size() < 3) return missing(t, "'{'");
        if (t[2].kind != Tok::LBrace) return unexpected(t[2], "'{'");
        const bool closes = t.size() >= 4 && t[3].kind == Tok::RBrace;
        if (t.size() > (closes ? 4u : 3u)) return unexpected(t[closes ? 4 : 3], "end of line");
        current_ = PatternGraph{};
        current_.name = std::string(t[1].text);
        header_line_ = line_no_;
        header_column_ = t[1].column;
        pending_.clear();
        open_ = true;
        if (closes) close_pattern();
        return std::nullopt;
    }

    std::optional<LineError> multiplicity(const std::vector<Token>& t, std::size_t at, Multiplicity& m) {
        m = 1;
        if (t.size() == at) return std::nullopt;
        if (t[at].kind != Tok::Star) return unexpected(t[at], "'*' or end of line");
        if (t.size() == at + 1) return missing(t, "multiplicity");
        const auto& v = t[at + 1];
        if (v.kind != Tok::Int) return LineError{v.column, "BadMultiplicity", "multiplicity must be a non-zero integer"};
        const char* first = v.text.data() + (v.text.front() == '+' ? 1 : 0);
        const auto [end, err] = std::from_chars(first, v.text.data() + v.text.size(), m);
        if (err != std::errc{} || m == 0)
            return LineError{v.column, "BadMultiplicity", "multiplicity must be a non-zero 64-bit integer"};
        if (t.size() > at + 2) return unexpected(t[at + 2], "end of line");
        if (m < 0)
            warning(line_no_, v.column, "NegativeMultiplicity",
                    "negative multiplicity describes an anti-pattern, not a design");
        return std::nullopt;
    }

    std::optional<LineError> element(const std::vector<Token>& t) {
        const auto& kw = t[0];
        if (kw.kind == Tok::RBrace) {
            if (t.size() > 1) return unexpected(t[1], "end of line");
            close_pattern();
            return std::nullopt;
        }
        if (kw.kind != Tok::Ident) return unexpected(kw, "an element keyword");
        Multiplicity m = 1;
        if (kw.text == "participant") {
            if (t.size() < 2) return missing(t, "participant name");
            if (t[1].kind != Tok::Ident) return unexpected(t[1], "participant name");
            if (auto e = multiplicity(t, 2, m)) return e;
            const std::string name(t[1].text);
            if (current_.participants.contains(name))
                return LineError{t[1].column, "DuplicateParticipant", "participant '" + name + "' declared twice"};
            current_.participants.add(name, m);
        } else if (kw.text == "relation") {
            if (t.size() < 5) return missing(t, "'relation KIND FROM -> TO'");
            RelationKind kind{};
            if (t[1].kind != Tok::Ident) return unexpected(t[1], "relation kind");
            if (!algebra::parse_relation_kind(t[1].text, kind))
                return LineError{t[1].column, "UnknownRelationKind",
                                 "relation kind must be inherits, associates, delegates or creates"};
            if (t[2].kind != Tok::Ident) return unexpected(t[2], "relation source");
            if (t[3].kind != Tok::Arrow) return unexpected(t[3], "'->'");
            if (t[4].kind != Tok::Ident) return unexpected(t[4], "relation target");
            if (auto e = multiplicity(t, 5, m)) return e;
            Relation rel{kind, std::string(t[2].text), std::string(t[4].text)};
            if (current_.relations.contains(rel))
                return LineError{kw.column, "DuplicateRelation", "relation declared twice"};
            current_.relations.add(rel, m);
            pending_.push_back(PendingRef{line_no_, t[2].column, rel.from, false});
            pending_.push_back(PendingRef{line_no_, t[4].column, rel.to, false});
        } else if (kw.text == "role") {
            if (t.size() < 4) return missing(t, "'role NAME = PARTICIPANT'");
            if (t[1].kind != Tok::Ident) return unexpected(t[1], "role name");
            if (t[2].kind != Tok::Equals) return unexpected(t[2], "'='");
            if (t[3].kind != Tok::Ident) return unexpected(t[3], "participant name");
            if (auto e = multiplicity(t, 4, m)) return e;
            RoleAssignment role{std::string(t[1].text), std::string(t[3].text)};
            if (current_.roles.contains(role)) return LineError{kw.column, "DuplicateRole", "role assigned twice"};
            current_.roles.add(role, m);
            pending_.push_back(PendingRef{line_no_, t[3].column, role.target, true});
        } else if (kw.text == "slot") {
            if (t.size() < 2) return missing(t, "slot name");
            if (t[1].kind != Tok::Ident) return unexpected(t[1], "slot name");
            if (auto e = multiplicity(t, 2, m)) return e;
            const std::string name(t[1].text);
            if (current_.slots.contains(name))
                return LineError{t[1].column, "DuplicateSlot", "slot '" + name + "' declared twice"};
            current_.slots.add(name, m);
        } else if (kw.text == "pattern") {
            return LineError{kw.column, "UnexpectedToken", "'pattern' inside the body of '" + current_.name + "'"};
        } else {
            return LineError{kw.column, "UnknownKeyword", "unknown keyword '" + std::string(kw.text) + "'"};
        }
        return std::nullopt;
    }

    void close_pattern() {
        open_ = false;
        std::set<std::size_t> reported;
        for (const auto& ref : pending_) {
            if (ref.name == algebra::kEmptyParticipant || current_.participants.contains(ref.name)) continue;
            if (!reported.insert(ref.line).second) continue;
            if (ref.is_role)
                error(ref.line, ref.column, "DanglingRole", "role target '" + ref.name + "' is not a participant");
            else
                error(ref.line, ref.column, "DanglingRelation", "relation endpoint '" + ref.name + "' is not a participant");
        }
        pending_.clear();
        if (catalog_.patterns.contains(current_.name)) {
            error(header_line_, header_column_, "DuplicatePattern", "pattern '" + current_.name + "' defined twice");
            return;
        }
        const auto name = current_.name;
        catalog_.patterns.emplace(name, std::move(current_));
    }

    Catalog catalog_;
    std::vector<Diagnostic> diagnostics_;
    PatternGraph current_;
    std::vector<PendingRef> pending_;
    std::size_t line_no_ = 0;
    std::size_t header_line_ = 0;
    std::size_t header_column_ = 0;
    bool open_ = false;
};

std::string suffix(Multiplicity m) { return m == 1 ? std::string() : " * " + std::to_string(m); }

}  // namespace

std::string format_diagnostic(const Diagnostic& d, std::string_view source) {
    return std::string(source) + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
           (d.severity == Severity::Error ? "error" : "warning") + ": " + d.code + ": " + d.message;
}

const algebra::PatternGraph& Catalog::at(const std::string& name) const {
    const auto it = patterns.find(name);
    if (it == patterns.end()) throw Error(ErrorKind::UnknownPattern, "no pattern '" + name + "' in " + source_path);
    return it->second;
}

ParseOutcome parse_catalog(std::string_view text, std::string source_path) {
    return Parser(std::move(source_path)).run(text);
}

std::string to_pdl(const algebra::PatternGraph& p) {
    std::string out = "pattern " + p.name + " {\n";
    for (const auto& [name, m] : p.participants) out += "  participant " + name + suffix(m) + "\n";
    for (const auto& [rel, m] : p.relations)
        out += "  relation " + std::string(algebra::to_string(rel.kind)) + " " + rel.from + " -> " + rel.to +
               suffix(m) + "\n";
    for (const auto& [role, m] : p.roles) out += "  role " + role.role + " = " + role.target + suffix(m) + "\n";
    for (const auto& [slot, m] : p.slots) out += "  slot " + slot + suffix(m) + "\n";
    out += "}\n";
    return out;
}

std::string to_pdl(const Catalog& catalog) {
    std::string out;
    for (const auto& [name, p] : catalog.patterns) {
        if (!out.empty()) out += '\n';
        out += to_pdl(p);
    }
    return out;
}

}  // namespace poad::cli
