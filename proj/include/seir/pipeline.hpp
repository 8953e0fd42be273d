#pragma once

#include "seir/document.hpp"

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace seir {

struct PipelineConfig {
    bool keep_compound_for_code = true;
    std::set<std::string> english_stopwords;
    std::set<std::string> java_stopwords;

    /// Lists compiled in from data/stopwords_en.txt and data/stopwords_java.txt.
    static PipelineConfig defaults();
    /// Reads `stopwords_en.txt` and `stopwords_java.txt` from `dir`.
    static PipelineConfig from_directory(const std::filesystem::path& dir);

    bool is_stopword(std::string_view token) const;
    /// Stable digest over every setting that changes pipeline output.
    std::string fingerprint() const;
};

/// Parses a one-word-per-line list; blank lines and `#` comments are ignored.
std::set<std::string> parse_word_list(std::string_view text);

/// Splits on every byte outside [A-Za-z0-9]; non-ASCII bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

/// camelCase decomposition. Boundaries: lower->Upper, digit->Upper, and the end
/// of an acronym ("XMLParser" -> XML, Parser). When `keep_compound` is set and
/// the token actually splits, the original token is prepended.
std::vector<std::string> split_camel(std::string_view token, bool keep_compound = false);

/// Strips digits and lowercases; tokens left empty are dropped.
std::vector<std::string> normalize(const std::vector<std::string>& tokens);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens, const PipelineConfig& config);

std::string stem(std::string_view token);

/// tokenize -> split_camel -> normalize -> remove_stopwords -> stem.
std::vector<std::string> preprocess(std::string_view text, DocumentKind kind, const PipelineConfig& config);

}  // namespace seir
