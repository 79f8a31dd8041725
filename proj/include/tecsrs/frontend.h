#ifndef TECSRS_FRONTEND_H_
#define TECSRS_FRONTEND_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecsrs/model.h"

namespace tecsrs {

enum class TokenKind { kKeyword, kIdentifier, kString, kInteger, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  // Decoded value. For strings this is the content without quotes, escapes
  // resolved; for everything else it equals the lexeme.
  std::string text;
  int line = 1;
  int column = 1;
  // Byte range of the lexeme in the original input.
  std::size_t offset = 0;
  std::size_t length = 0;

  bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

struct TokenizeResult {
  std::vector<Token> tokens;  // without the trailing kEnd token
  std::vector<Diagnostic> diagnostics;
};

TokenizeResult Tokenize(std::string_view text, std::string_view source_name);

struct ParseResult {
  std::optional<CdlUnit> unit;  // present iff no Error diagnostics
  std::vector<Diagnostic> diagnostics;
};

ParseResult ParseUnit(std::string_view text, std::string_view source_name);

// Canonical CDL text; ParseUnit(RenderUnit(u)) compares equal to u.
std::string RenderUnit(const CdlUnit& unit);

}  // namespace tecsrs

#endif  // TECSRS_FRONTEND_H_
