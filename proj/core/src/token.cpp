#include "normcheck/token.hpp"

#include <cctype>

namespace normcheck {

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Number: return "Number";
    case TokenKind::Punct: return "Punct";
    case TokenKind::Space: return "Space";
  }
  return "Punct";
}

const char* to_string(Orth orth) {
  switch (orth) {
    case Orth::Lower: return "Lower";
    case Orth::Upper: return "Upper";
    case Orth::Capitalized: return "Capitalized";
    case Orth::Mixed: return "Mixed";
    case Orth::NA: return "NA";
  }
  return "NA";
}

std::string fold_case(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

namespace {

inline bool is_letter(unsigned char c) { return std::isalpha(c) != 0; }
inline bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }
inline bool is_space(unsigned char c) { return std::isspace(c) != 0; }

std::size_t utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;  // invalid lead byte, consume one byte
}

Orth word_orth(std::string_view surface) {
  bool all_lower = true;
  bool all_upper = true;
  for (char c : surface) {
    if (std::islower(static_cast<unsigned char>(c))) all_upper = false;
    if (std::isupper(static_cast<unsigned char>(c))) all_lower = false;
  }
  if (all_lower) return Orth::Lower;
  if (all_upper) return Orth::Upper;
  if (std::isupper(static_cast<unsigned char>(surface[0]))) {
    bool rest_lower = true;
    for (std::size_t i = 1; i < surface.size(); ++i) {
      if (!std::islower(static_cast<unsigned char>(surface[i]))) {
        rest_lower = false;
        break;
      }
    }
    if (rest_lower) return Orth::Capitalized;
  }
  return Orth::Mixed;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t start = i;
    Token token;
    if (c < 0x80 && is_letter(c)) {
      while (i < n && static_cast<unsigned char>(text[i]) < 0x80 &&
             is_letter(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      token.kind = TokenKind::Word;
    } else if (c < 0x80 && is_digit(c)) {
      while (i < n && static_cast<unsigned char>(text[i]) < 0x80 &&
             is_digit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      token.kind = TokenKind::Number;
    } else if (c < 0x80 && is_space(c)) {
      while (i < n && static_cast<unsigned char>(text[i]) < 0x80 &&
             is_space(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      token.kind = TokenKind::Space;
    } else {
      i += utf8_len(c);
      if (i > n) i = n;
      token.kind = TokenKind::Punct;
    }
    token.span = {start, i};
    token.surface = std::string(text.substr(start, i - start));
    token.orth =
        token.kind == TokenKind::Word ? word_orth(token.surface) : Orth::NA;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace normcheck
