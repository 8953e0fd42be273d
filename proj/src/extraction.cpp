#include "seir/extraction.hpp"

#include "seir/error.hpp"
#include "seir/java_scanner.hpp"

#include <algorithm>

namespace seir {

namespace {

using java::Token;
using java::TokenType;

bool is_ident(const std::vector<Token>& t, std::size_t i)
{
    return i < t.size() && t[i].type == TokenType::identifier;
}

bool is_sym(const std::vector<Token>& t, std::size_t i, std::string_view s)
{
    return i < t.size() && t[i].type == TokenType::symbol && t[i].text == s;
}

bool is_word(const std::vector<Token>& t, std::size_t i, std::string_view w)
{
    return is_ident(t, i) && t[i].text == w;
}

bool is_primitive(std::string_view w)
{
    return w == "void" || w == "boolean" || w == "byte" || w == "char" || w == "short" || w == "int"
           || w == "long" || w == "float" || w == "double";
}

bool has_lower(std::string_view w)
{
    return std::any_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool starts_upper(std::string_view w) { return !w.empty() && w.front() >= 'A' && w.front() <= 'Z'; }

/// Index just past the ')' matching the '(' at `open`, or t.size().
std::size_t skip_parens(const std::vector<Token>& t, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (is_sym(t, i, "(")) {
            ++depth;
        } else if (is_sym(t, i, ")")) {
            if (--depth == 0) {
                return i + 1;
            }
        }
    }
    return t.size();
}

/// `t[i]` names a type being declared (class Foo, @interface Foo, record Foo(...)).
bool is_type_declaration_name(const std::vector<Token>& t, std::size_t i)
{
    if (i == 0 || !is_ident(t, i)) {
        return false;
    }
    const auto& prev = t[i - 1].text;
    if (t[i - 1].type != TokenType::identifier) {
        return false;
    }
    bool qualified_literal = i >= 2 && is_sym(t, i - 2, ".");
    if ((prev == "class" || prev == "interface" || prev == "enum") && !qualified_literal) {
        return true;
    }
    return prev == "record" && !qualified_literal && (is_sym(t, i + 1, "(") || is_sym(t, i + 1, "<"));
}

bool is_method_declaration(const std::vector<Token>& t, std::size_t i)
{
    if (i == 0 || !is_ident(t, i) || java::is_keyword(t[i].text) || !is_sym(t, i + 1, "(")) {
        return false;
    }
    const auto& prev = t[i - 1];
    bool typed_prefix = false;
    if (prev.type == TokenType::identifier) {
        typed_prefix = !java::is_keyword(prev.text) || is_primitive(prev.text);
    } else {
        typed_prefix = prev.text == ">" || prev.text == "]";
    }
    if (!typed_prefix) {
        return false;
    }
    std::size_t after = skip_parens(t, i + 1);
    return is_sym(t, after, "{") || is_sym(t, after, ";") || is_word(t, after, "throws") || is_word(t, after, "default");
}

/// Capitalised identifier in a type position.
bool is_type_reference(const std::vector<Token>& t, std::size_t i)
{
    const auto& w = t[i].text;
    if (!starts_upper(w) || w.size() < 2 || java::is_keyword(w) || is_type_declaration_name(t, i)) {
        return false;
    }
    bool after_new = i > 0 && is_word(t, i - 1, "new");
    bool annotation = i > 0 && is_sym(t, i - 1, "@");
    if (is_sym(t, i + 1, "(") && !after_new && !annotation) {
        return false;  // constructor declaration or capitalised call
    }
    if (has_lower(w)) {
        return true;
    }
    // ALL_CAPS names are usually constants; accept them only where a type must be.
    if (w.find('_') != std::string::npos) {
        return false;
    }
    return after_new || is_ident(t, i + 1) || is_sym(t, i + 1, "<");
}

void sort_all(ExtractedCodeFacts& f)
{
    std::sort(f.declared_methods.begin(), f.declared_methods.end());
    std::sort(f.declared_classes.begin(), f.declared_classes.end());
    std::sort(f.imported_packages.begin(), f.imported_packages.end());
    std::sort(f.used_classes.begin(), f.used_classes.end());
    std::sort(f.api_classes.begin(), f.api_classes.end());
}

void compute_api(ExtractedCodeFacts& f)
{
    std::set<std::string> declared(f.declared_classes.begin(), f.declared_classes.end());
    f.api_classes.clear();
    for (const auto& used : f.used_classes) {
        if (!declared.contains(used)) {
            f.api_classes.push_back(used);
        }
    }
}

std::string join(const std::vector<std::string>& words)
{
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += w;
    }
    return out;
}

}  // namespace

ExtractedCodeFacts extract_java_facts(std::string_view source, std::string_view origin)
{
    if (java::looks_binary(source)) {
        throw ExtractionError(std::string(origin), "binary or non-UTF-8 content");
    }
    auto t = java::lex(source);
    ExtractedCodeFacts facts;
    for (std::size_t i = 0; i < t.size(); ++i) {
        bool statement_start = i == 0 || is_sym(t, i - 1, ";") || is_sym(t, i - 1, "}");
        if (statement_start && (is_word(t, i, "package") || is_word(t, i, "import"))) {
            bool import = t[i].text == "import";
            std::string name;
            std::size_t j = i + 1;
            if (is_word(t, j, "static")) {
                ++j;
            }
            for (; j < t.size() && !is_sym(t, j, ";"); ++j) {
                if (is_sym(t, j, "*")) {
                    continue;
                }
                name += t[j].text;
            }
            while (!name.empty() && name.back() == '.') {
                name.pop_back();
            }
            if (import && !name.empty()) {
                facts.imported_packages.push_back(name);
            }
            i = j;
            continue;
        }
        if (!is_ident(t, i)) {
            continue;
        }
        if (is_type_declaration_name(t, i)) {
            facts.declared_classes.push_back(t[i].text);
        } else if (is_method_declaration(t, i)) {
            facts.declared_methods.push_back(t[i].text);
        } else if (is_type_reference(t, i)) {
            facts.used_classes.push_back(t[i].text);
        }
    }
    compute_api(facts);
    sort_all(facts);
    return facts;
}

ExtractedCodeFacts merge_facts(const std::vector<ExtractedCodeFacts>& parts)
{
    ExtractedCodeFacts merged;
    for (const auto& p : parts) {
        merged.declared_methods.insert(merged.declared_methods.end(), p.declared_methods.begin(), p.declared_methods.end());
        merged.declared_classes.insert(merged.declared_classes.end(), p.declared_classes.begin(), p.declared_classes.end());
        merged.imported_packages.insert(merged.imported_packages.end(), p.imported_packages.begin(),
                                        p.imported_packages.end());
        merged.used_classes.insert(merged.used_classes.end(), p.used_classes.begin(), p.used_classes.end());
    }
    compute_api(merged);
    sort_all(merged);
    return merged;
}

ExtractedCodeFacts extract_project_facts(const std::vector<SourceFile>& files)
{
    std::vector<ExtractedCodeFacts> parts;
    parts.reserve(files.size());
    for (const auto& f : files) {
        parts.push_back(extract_java_facts(f.text, f.path));
    }
    return merge_facts(parts);
}

Document project_artifact_document(const ProjectRecord& project, DocumentKind kind, const PipelineConfig& config)
{
    bool needs_code = kind == DocumentKind::method_class || kind == DocumentKind::import_package
                      || kind == DocumentKind::api;
    return project_artifact_document(project, kind,
                                     needs_code ? extract_project_facts(project.source_files) : ExtractedCodeFacts{},
                                     config);
}

Document project_artifact_document(const ProjectRecord& project, DocumentKind kind, const ExtractedCodeFacts& facts,
                                   const PipelineConfig& config)
{
    std::string raw;
    switch (kind) {
    case DocumentKind::description:
        raw = project.description;
        break;
    case DocumentKind::readme:
        raw = project.readme;
        break;
    case DocumentKind::method_class: {
        std::vector<std::string> names = facts.declared_methods;
        names.insert(names.end(), facts.declared_classes.begin(), facts.declared_classes.end());
        raw = join(names);
        break;
    }
    case DocumentKind::import_package:
        raw = join(facts.imported_packages);
        break;
    case DocumentKind::api:
        raw = join(facts.api_classes);
        break;
    default:
        throw ConfigError("not a project artifact kind: " + std::string(to_string(kind)));
    }
    Document doc;
    doc.doc_id = project.project_id + ":" + std::string(to_string(kind));
    doc.kind = kind;
    doc.tokens = preprocess(raw, kind, config);
    doc.missing = raw.find_first_not_of(" \t\r\n") == std::string::npos;
    return doc;
}

Document bug_query_document(const BugReport& report, const PipelineConfig& config)
{
    auto blank = [](const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; };
    if (blank(report.summary) && blank(report.description)) {
        throw DataError("bug report " + report.report_id + " has neither summary nor description");
    }
    Document doc;
    doc.doc_id = report.report_id;
    doc.kind = DocumentKind::bug_report;
    doc.tokens = preprocess(report.summary + "\n" + report.description, DocumentKind::bug_report, config);
    return doc;
}

std::size_t GroundTruth::total_relevant(const std::string& query_id) const
{
    auto it = relevant.find(query_id);
    return it == relevant.end() ? 0 : it->second.size();
}

GroundTruthEntry bug_ground_truth(const BugReport& report, const std::set<std::string>& snapshot)
{
    GroundTruthEntry entry;
    for (const auto& file : report.fixed_files) {
        if (snapshot.contains(file)) {
            entry.relevant.insert(file);
        }
    }
    if (entry.relevant.empty()) {
        entry.excluded_reason = report.fixed_files.empty()
                                    ? "fix commit only added files"
                                    : "no modified or deleted file exists in the before-fix snapshot";
    }
    return entry;
}

}  // namespace seir
