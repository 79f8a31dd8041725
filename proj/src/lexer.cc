#include <array>
#include <cctype>

#include "tecsrs/frontend.h"

namespace tecsrs {
namespace {

constexpr std::array<std::string_view, 12> kKeywords = {
    "signature", "celltype", "cell",    "call",  "entry",  "attr",
    "var",       "factory",  "FACTORY", "generate", "C_EXP", "write",
};

constexpr std::string_view kPunct = "{}()[];,=.*-";

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool IsHexDigit(char c) { return std::isxdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view source_name)
      : text_(text), source_(source_name) {}

  TokenizeResult Run() {
    TokenizeResult result;
    while (SkipTrivia(result)) {
      LexOne(result);
    }
    return result;
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool AtEnd() const { return pos_ >= text_.size(); }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  SourceSpan Here() const { return {std::string(source_), line_, column_}; }

  void Error(TokenizeResult& result, std::string code, std::string message,
             SourceSpan at) {
    result.diagnostics.push_back(
        {Severity::kError, std::move(code), std::move(message), std::move(at)});
  }

  // Returns false at end of input.
  bool SkipTrivia(TokenizeResult& result) {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        const SourceSpan start = Here();
        Advance();
        Advance();
        bool closed = false;
        while (!AtEnd()) {
          if (Peek() == '*' && Peek(1) == '/') {
            Advance();
            Advance();
            closed = true;
            break;
          }
          Advance();
        }
        if (!closed) {
          Error(result, "unterminated-comment", "unterminated block comment",
                start);
        }
      } else {
        return true;
      }
    }
    return false;
  }

  void LexOne(TokenizeResult& result) {
    Token token;
    token.line = line_;
    token.column = column_;
    token.offset = pos_;
    const char c = Peek();

    if (IsIdentStart(c)) {
      while (!AtEnd() && IsIdentChar(Peek())) Advance();
      token.text = std::string(text_.substr(token.offset, pos_ - token.offset));
      token.kind = TokenKind::kIdentifier;
      for (auto keyword : kKeywords) {
        if (keyword == token.text) token.kind = TokenKind::kKeyword;
      }
    } else if (IsDigit(c)) {
      if (c == '0' && (Peek(1) == 'x' || Peek(1) == 'X') && IsHexDigit(Peek(2))) {
        Advance();
        Advance();
        while (!AtEnd() && IsHexDigit(Peek())) Advance();
      } else {
        while (!AtEnd() && IsDigit(Peek())) Advance();
      }
      token.text = std::string(text_.substr(token.offset, pos_ - token.offset));
      token.kind = TokenKind::kInteger;
    } else if (c == '"') {
      if (!LexString(result, token)) return;
    } else if (kPunct.find(c) != std::string_view::npos) {
      Advance();
      token.text = std::string(1, c);
      token.kind = TokenKind::kPunct;
    } else {
      const SourceSpan at = Here();
      Advance();
      Error(result, "unexpected-character",
            std::string("unexpected character '") + c + "'", at);
      return;
    }
    token.length = pos_ - token.offset;
    result.tokens.push_back(std::move(token));
  }

  bool LexString(TokenizeResult& result, Token& token) {
    const SourceSpan start = Here();
    Advance();  // opening quote
    std::string value;
    bool ok = true;
    while (true) {
      if (AtEnd() || Peek() == '\n') {
        Error(result, "unterminated-string", "unterminated string literal",
              start);
        return false;
      }
      const char c = Peek();
      if (c == '"') {
        Advance();
        break;
      }
      if (c == '\\') {
        const SourceSpan escape_at = Here();
        Advance();
        const char e = Peek();
        switch (e) {
          case '"':
            value.push_back('"');
            break;
          case '\\':
            value.push_back('\\');
            break;
          case 'n':
            value.push_back('\n');
            break;
          case 't':
            value.push_back('\t');
            break;
          default:
            Error(result, "invalid-escape",
                  std::string("unsupported escape sequence '\\") + e + "'",
                  escape_at);
            ok = false;
            if (AtEnd() || e == '\n') continue;
            break;
        }
        Advance();
        continue;
      }
      value.push_back(c);
      Advance();
    }
    token.kind = TokenKind::kString;
    token.text = std::move(value);
    return ok;
  }

  std::string_view text_;
  std::string_view source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

TokenizeResult Tokenize(std::string_view text, std::string_view source_name) {
  return Lexer(text, source_name).Run();
}

}  // namespace tecsrs
