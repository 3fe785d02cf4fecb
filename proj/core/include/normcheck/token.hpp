#ifndef NORMCHECK_TOKEN_HPP
#define NORMCHECK_TOKEN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "normcheck/corpus.hpp"

namespace normcheck {

enum class TokenKind { Word, Number, Punct, Space };
enum class Orth { Lower, Upper, Capitalized, Mixed, NA };

const char* to_string(TokenKind kind);
const char* to_string(Orth orth);

struct Token {
  Span span;
  std::string surface;
  TokenKind kind = TokenKind::Punct;
  Orth orth = Orth::NA;
};

// Character-class scan: maximal ASCII letter runs become Word, digit runs
// Number, whitespace runs Space; anything else is a single-codepoint Punct
// (multi-byte UTF-8 sequences stay in one token). Tokens tile the input.
std::vector<Token> tokenize(std::string_view text);

// ASCII lowercase fold, used everywhere a case-insensitive comparison is
// specified.
std::string fold_case(std::string_view s);

}  // namespace normcheck

#endif  // NORMCHECK_TOKEN_HPP
