#include "seir/pipeline.hpp"

#include "seir/default_stopwords.hpp"
#include "seir/error.hpp"
#include "seir/hashing.hpp"
#include "seir/porter_stemmer.hpp"

#include <fstream>
#include <sstream>

namespace seir {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read stopword list " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string_view to_string(DocumentKind kind)
{
    switch (kind) {
    case DocumentKind::description:
        return "description";
    case DocumentKind::readme:
        return "readme";
    case DocumentKind::method_class:
        return "method_class";
    case DocumentKind::import_package:
        return "import_package";
    case DocumentKind::api:
        return "api";
    case DocumentKind::source_file:
        return "source_file";
    case DocumentKind::bug_report:
        return "bug_report";
    case DocumentKind::api_description:
        return "api_description";
    }
    return "unknown";
}

std::optional<DocumentKind> parse_document_kind(std::string_view name)
{
    for (auto kind : {DocumentKind::description, DocumentKind::readme, DocumentKind::method_class,
                      DocumentKind::import_package, DocumentKind::api, DocumentKind::source_file,
                      DocumentKind::bug_report, DocumentKind::api_description}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

bool uses_code_branch(DocumentKind kind)
{
    switch (kind) {
    case DocumentKind::description:
    case DocumentKind::readme:
    case DocumentKind::api_description:
        return false;
    default:
        return true;
    }
}

std::set<std::string> parse_word_list(std::string_view text)
{
    std::set<std::string> words;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        std::string word = line.substr(first, last - first + 1);
        for (auto& c : word) {
            if (is_upper(c)) {
                c = static_cast<char>(c - 'A' + 'a');
            }
        }
        words.insert(std::move(word));
    }
    return words;
}

PipelineConfig PipelineConfig::defaults()
{
    PipelineConfig config;
    config.english_stopwords = parse_word_list(detail::kDefaultEnglishStopwords);
    config.java_stopwords = parse_word_list(detail::kDefaultJavaStopwords);
    return config;
}

PipelineConfig PipelineConfig::from_directory(const std::filesystem::path& dir)
{
    PipelineConfig config;
    config.english_stopwords = parse_word_list(read_file(dir / "stopwords_en.txt"));
    config.java_stopwords = parse_word_list(read_file(dir / "stopwords_java.txt"));
    return config;
}

bool PipelineConfig::is_stopword(std::string_view token) const
{
    std::string key(token);
    return english_stopwords.contains(key) || java_stopwords.contains(key);
}

std::string PipelineConfig::fingerprint() const
{
    Sha256 h;
    h.field("pipeline/v1");
    h.field("order=tokenize,split_camel,normalize,remove_stopwords,porter_stem");
    h.field(keep_compound_for_code ? "keep_compound=1" : "keep_compound=0");
    h.field("en");
    for (const auto& w : english_stopwords) {
        h.field(w);
    }
    h.field("java");
    for (const auto& w : java_stopwords) {
        h.field(w);
    }
    return h.hex_digest();
}

std::vector<std::string> tokenize(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_alnum(c)) {
            current.push_back(c);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

std::vector<std::string> split_camel(std::string_view token, bool keep_compound)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
        char prev = token[i - 1];
        char cur = token[i];
        bool boundary = (is_lower(prev) && is_upper(cur)) || (is_digit(prev) && is_upper(cur))
                        || (is_upper(prev) && is_upper(cur) && i + 1 < token.size() && is_lower(token[i + 1]));
        if (boundary) {
            parts.emplace_back(token.substr(start, i - start));
            start = i;
        }
    }
    if (start < token.size()) {
        parts.emplace_back(token.substr(start));
    }
    if (keep_compound && parts.size() > 1) {
        parts.insert(parts.begin(), std::string(token));
    }
    return parts;
}

std::vector<std::string> normalize(const std::vector<std::string>& tokens)
{
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        std::string norm;
        norm.reserve(token.size());
        for (char c : token) {
            if (is_upper(c)) {
                norm.push_back(static_cast<char>(c - 'A' + 'a'));
            } else if (is_lower(c)) {
                norm.push_back(c);
            }
        }
        if (!norm.empty()) {
            out.push_back(std::move(norm));
        }
    }
    return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens, const PipelineConfig& config)
{
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (!config.is_stopword(token)) {
            out.push_back(token);
        }
    }
    return out;
}

std::string stem(std::string_view token) { return porter_stem(token); }

std::vector<std::string> preprocess(std::string_view text, DocumentKind kind, const PipelineConfig& config)
{
    bool keep_compound = config.keep_compound_for_code && uses_code_branch(kind);
    std::vector<std::string> split;
    for (const auto& raw : tokenize(text)) {
        for (auto& part : split_camel(raw, keep_compound)) {
            split.push_back(std::move(part));
        }
    }
    auto tokens = remove_stopwords(normalize(split), config);
    for (auto& token : tokens) {
        token = stem(token);
    }
    return tokens;
}

}  // namespace seir
