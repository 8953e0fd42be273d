#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seir::java {

enum class TokenType { identifier, symbol };

struct Token {
    TokenType type;
    std::string text;
};

/// Lexes Java source into identifiers and single/multi-char symbols.
/// Comments, string/char/text-block literals and numbers are discarded.
std::vector<Token> lex(std::string_view source);

bool is_keyword(std::string_view word);

/// True when the bytes contain NUL or are not valid UTF-8.
bool looks_binary(std::string_view bytes);

}  // namespace seir::java
