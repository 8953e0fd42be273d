#include "seir/java_scanner.hpp"

#include <algorithm>
#include <array>

namespace seir::java {

namespace {

bool ident_start(unsigned char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",  "assert",       "boolean",  "break",      "byte",      "case",      "catch",
    "char",      "class",        "const",    "continue",   "default",   "do",        "double",
    "else",      "enum",         "extends",  "final",      "finally",   "float",     "for",
    "goto",      "if",           "implements", "import",   "instanceof", "int",      "interface",
    "long",      "native",       "new",      "package",    "private",   "protected", "public",
    "return",    "short",        "static",   "strictfp",   "super",     "switch",    "synchronized",
    "this",      "throw",        "throws",   "transient",  "try",       "void",      "volatile",
    "while",     "true",         "false",    "null",
};

}  // namespace

bool is_keyword(std::string_view word)
{
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool looks_binary(std::string_view bytes)
{
    std::size_t i = 0;
    while (i < bytes.size()) {
        auto c = static_cast<unsigned char>(bytes[i]);
        if (c == 0) {
            return true;
        }
        std::size_t extra = 0;
        if (c < 0x80) {
            extra = 0;
        } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
        } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
            extra = 3;
        } else {
            return true;
        }
        if (i + extra >= bytes.size()) {
            return true;
        }
        for (std::size_t k = 1; k <= extra; ++k) {
            if ((static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80) {
                return true;
            }
        }
        i += extra + 1;
    }
    return false;
}

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        auto c = static_cast<unsigned char>(src[i]);
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') {
                ++i;
            }
        } else if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            auto end = src.find("*/", i + 2);
            i = end == std::string_view::npos ? n : end + 2;
        } else if (c == '"' && src.substr(i, 3) == "\"\"\"") {
            auto end = src.find("\"\"\"", i + 3);
            i = end == std::string_view::npos ? n : end + 3;
        } else if (c == '"' || c == '\'') {
            char quote = src[i++];
            while (i < n && src[i] != quote && src[i] != '\n') {
                i += src[i] == '\\' ? 2 : 1;
            }
            ++i;
        } else if (c >= '0' && c <= '9') {
            while (i < n && (ident_part(static_cast<unsigned char>(src[i])) || src[i] == '.')) {
                ++i;
            }
        } else if (ident_start(c)) {
            std::size_t start = i;
            while (i < n && ident_part(static_cast<unsigned char>(src[i]))) {
                ++i;
            }
            tokens.push_back({TokenType::identifier, std::string(src.substr(start, i - start))});
        } else if (c <= ' ') {
            ++i;
        } else if (src.substr(i, 3) == "...") {
            tokens.push_back({TokenType::symbol, "..."});
            i += 3;
        } else {
            tokens.push_back({TokenType::symbol, std::string(1, src[i])});
            ++i;
        }
    }
    return tokens;
}

}  // namespace seir::java
