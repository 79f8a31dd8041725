#include <utility>

#include "tecsrs/frontend.h"

namespace tecsrs {
namespace {

// Thrown on the first syntax error inside a top-level definition; the parser
// records a diagnostic and resynchronizes at the next top-level `;` or `}`.
struct SyntaxError {
  Diagnostic diagnostic;
};

std::string Describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kString:
      return "string \"" + token.text + "\"";
    default:
      return "'" + token.text + "'";
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view text,
         std::string_view source_name)
      : tokens_(std::move(tokens)), source_(source_name) {
    Token end;
    end.kind = TokenKind::kEnd;
    end.offset = text.size();
    // Position end-of-input just past the last character.
    end.line = 1;
    end.column = 1;
    for (char c : text) {
      if (c == '\n') {
        ++end.line;
        end.column = 1;
      } else {
        ++end.column;
      }
    }
    tokens_.push_back(std::move(end));
  }

  ParseResult Run() {
    CdlUnit unit;
    unit.source_name = std::string(source_);
    while (Cur().kind != TokenKind::kEnd) {
      const std::size_t item_start = pos_;
      try {
        ParseItem(unit);
      } catch (const SyntaxError& e) {
        diagnostics_.push_back(e.diagnostic);
        Synchronize(item_start);
      }
    }
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (!HasErrors(result.diagnostics)) result.unit = std::move(unit);
    return result;
  }

 private:
  const Token& Cur() const { return tokens_[pos_]; }
  const Token& Next() const {
    return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : pos_];
  }

  const Token& Advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  SourceSpan SpanOf(const Token& t) const {
    return {std::string(source_), t.line, t.column};
  }

  [[noreturn]] void Fail(std::string code, std::string message,
                         const Token& at) const {
    throw SyntaxError{
        {Severity::kError, std::move(code), std::move(message), SpanOf(at)}};
  }

  [[noreturn]] void Expected(std::string_view what) const {
    Fail("syntax-error",
         "expected " + std::string(what) + ", found " + Describe(Cur()), Cur());
  }

  bool IsPunct(std::string_view p) const { return Cur().Is(TokenKind::kPunct, p); }
  bool IsKeyword(std::string_view k) const {
    return Cur().Is(TokenKind::kKeyword, k);
  }

  const Token& ExpectPunct(std::string_view p) {
    if (!IsPunct(p)) Expected("'" + std::string(p) + "'");
    return Advance();
  }

  const Token& ExpectKeyword(std::string_view k) {
    if (!IsKeyword(k)) Expected("'" + std::string(k) + "'");
    return Advance();
  }

  const Token& ExpectIdentifier(std::string_view what) {
    if (Cur().kind != TokenKind::kIdentifier) Expected(what);
    return Advance();
  }

  const Token& ExpectString(std::string_view what) {
    if (Cur().kind != TokenKind::kString) Expected(what);
    return Advance();
  }

  // Skips to the end of the definition that started at `item_start`.
  void Synchronize(std::size_t item_start) {
    int depth = 0;
    for (std::size_t i = item_start; i < pos_; ++i) {
      if (tokens_[i].Is(TokenKind::kPunct, "{")) ++depth;
      if (tokens_[i].Is(TokenKind::kPunct, "}")) --depth;
    }
    while (Cur().kind != TokenKind::kEnd) {
      const Token& t = Advance();
      if (t.Is(TokenKind::kPunct, "{")) {
        ++depth;
      } else if (t.Is(TokenKind::kPunct, "}")) {
        if (--depth <= 0) {
          if (IsPunct(";")) Advance();
          return;
        }
      } else if (t.Is(TokenKind::kPunct, ";") && depth <= 0) {
        return;
      }
    }
  }

  void ParseItem(CdlUnit& unit) {
    std::optional<PluginDirective> directive;
    if (IsPunct("[")) directive = ParseDirective();
    if (IsKeyword("signature")) {
      if (directive) {
        Fail("misplaced-directive",
             "generate directive must precede a celltype or cell", Cur());
      }
      unit.signatures.push_back(ParseSignature());
    } else if (IsKeyword("celltype")) {
      unit.celltypes.push_back(ParseCelltype(std::move(directive)));
    } else if (IsKeyword("cell")) {
      unit.cells.push_back(ParseCell(std::move(directive)));
    } else {
      Expected("'signature', 'celltype' or 'cell'");
    }
  }

  PluginDirective ParseDirective() {
    ExpectPunct("[");
    PluginDirective directive;
    directive.location = SpanOf(ExpectKeyword("generate"));
    ExpectPunct("(");
    directive.plugin_name = ExpectIdentifier("plugin name").text;
    ExpectPunct(",");
    directive.argument = ExpectString("plugin argument string").text;
    ExpectPunct(")");
    ExpectPunct("]");
    return directive;
  }

  SignatureDef ParseSignature() {
    SignatureDef sig;
    sig.location = SpanOf(ExpectKeyword("signature"));
    sig.name = ExpectIdentifier("signature name").text;
    ExpectPunct("{");
    while (!IsPunct("}")) sig.functions.push_back(ParseFunction());
    ExpectPunct("}");
    ExpectPunct(";");
    return sig;
  }

  FunctionDecl ParseFunction() {
    FunctionDecl fn;
    const Token& ret = ExpectIdentifier("return type or '}'");
    fn.location = SpanOf(ret);
    fn.return_type = ret.text;
    if (IsPunct("*")) {
      Fail("pointer-return-unsupported", "pointer return types are not supported",
           Cur());
    }
    fn.name = ExpectIdentifier("function name").text;
    ExpectPunct("(");
    if (Cur().Is(TokenKind::kIdentifier, "void") && Next().Is(TokenKind::kPunct, ")")) {
      Advance();
    } else if (!IsPunct(")")) {
      fn.params.push_back(ParseParam());
      while (IsPunct(",")) {
        Advance();
        fn.params.push_back(ParseParam());
      }
    }
    ExpectPunct(")");
    ExpectPunct(";");
    return fn;
  }

  ParamDecl ParseParam() {
    ParamDecl param;
    if (!IsPunct("[")) {
      Fail("missing-specifier", "every parameter needs an [in] or [out] specifier",
           Cur());
    }
    param.location = SpanOf(Advance());
    const Token& spec = ExpectIdentifier("'in' or 'out'");
    if (spec.text == "in") {
      param.specifier = ParamSpecifier::kIn;
    } else if (spec.text == "out") {
      param.specifier = ParamSpecifier::kOut;
    } else {
      Fail("unsupported-specifier",
           "unsupported parameter specifier '" + spec.text + "'", spec);
    }
    ExpectPunct("]");
    param.c_type = ExpectIdentifier("parameter type").text;
    while (IsPunct("*")) {
      Advance();
      ++param.pointer_depth;
    }
    param.name = ExpectIdentifier("parameter name").text;
    return param;
  }

  struct Modifiers {
    bool is_inline = false;
    bool is_omit = false;
    const Token* first = nullptr;
  };

  Modifiers ParseModifiers() {
    Modifiers mods;
    if (!IsPunct("[")) return mods;
    mods.first = &Advance();
    do {
      if (IsPunct(",")) Advance();
      const Token& mod = ExpectIdentifier("modifier");
      if (mod.text == "inline") {
        mods.is_inline = true;
      } else if (mod.text == "omit") {
        mods.is_omit = true;
      } else {
        Fail("unsupported-modifier", "unsupported modifier '" + mod.text + "'",
             mod);
      }
    } while (IsPunct(","));
    ExpectPunct("]");
    return mods;
  }

  CelltypeDef ParseCelltype(std::optional<PluginDirective> directive) {
    CelltypeDef ct;
    ct.generate_directive = std::move(directive);
    ct.location = SpanOf(ExpectKeyword("celltype"));
    ct.name = ExpectIdentifier("celltype name").text;
    ExpectPunct("{");
    while (!IsPunct("}")) {
      const Modifiers mods = ParseModifiers();
      if (IsKeyword("call") || IsKeyword("entry")) {
        ParsePort(ct, mods);
      } else if (mods.first) {
        Expected("'call' or 'entry' after port modifiers");
      } else if (IsKeyword("attr")) {
        ParseAttrBlock(ct);
      } else if (IsKeyword("var")) {
        ParseVarBlock(ct);
      } else if (IsKeyword("factory") || IsKeyword("FACTORY")) {
        ct.factory_blocks.push_back(ParseFactory());
      } else {
        Expected("port, 'attr', 'var', 'factory', 'FACTORY' or '}'");
      }
    }
    ExpectPunct("}");
    ExpectPunct(";");
    return ct;
  }

  void ParsePort(CelltypeDef& ct, const Modifiers& mods) {
    PortDecl port;
    const Token& kw = Advance();
    port.location = SpanOf(mods.first ? *mods.first : kw);
    port.direction = kw.text == "call" ? PortDirection::kCall : PortDirection::kEntry;
    port.is_inline = mods.is_inline;
    port.is_omit = mods.is_omit;
    port.signature_name = ExpectIdentifier("signature name").text;
    port.port_name = ExpectIdentifier("port name").text;
    ExpectPunct(";");
    (port.direction == PortDirection::kCall ? ct.call_ports : ct.entry_ports)
        .push_back(std::move(port));
  }

  void ParseAttrBlock(CelltypeDef& ct) {
    ExpectKeyword("attr");
    ExpectPunct("{");
    while (!IsPunct("}")) {
      AttrDecl attr;
      const Modifiers mods = ParseModifiers();
      if (mods.is_inline) {
        Fail("unsupported-modifier", "attributes accept only [omit]", *mods.first);
      }
      attr.omit = mods.is_omit;
      const Token& type = ExpectIdentifier("attribute type or '}'");
      attr.location = SpanOf(mods.first ? *mods.first : type);
      attr.c_type = type.text;
      attr.name = ExpectIdentifier("attribute name").text;
      if (IsPunct("=")) {
        Advance();
        attr.initializer = ParseInitializer();
      }
      ExpectPunct(";");
      ct.attrs.push_back(std::move(attr));
    }
    ExpectPunct("}");
    ExpectPunct(";");
  }

  void ParseVarBlock(CelltypeDef& ct) {
    ExpectKeyword("var");
    ExpectPunct("{");
    while (!IsPunct("}")) {
      VarDecl var;
      if (IsPunct("[")) {
        Fail("unsupported-modifier", "variables accept no modifiers", Cur());
      }
      const Token& type = ExpectIdentifier("variable type or '}'");
      var.location = SpanOf(type);
      var.type_text = type.text;
      var.name = ExpectIdentifier("variable name").text;
      if (IsPunct("=")) {
        Advance();
        var.initializer = ParseInitializer();
      }
      ExpectPunct(";");
      ct.vars.push_back(std::move(var));
    }
    ExpectPunct("}");
    ExpectPunct(";");
  }

  FactoryBlock ParseFactory() {
    FactoryBlock block;
    const Token& kw = Advance();
    block.location = SpanOf(kw);
    block.scope = kw.text == "FACTORY" ? FactoryScope::kPerCelltype
                                       : FactoryScope::kPerCell;
    ExpectPunct("{");
    while (!IsPunct("}")) {
      FactoryWrite write;
      write.location = SpanOf(ExpectKeyword("write"));
      ExpectPunct("(");
      write.target_file = ExpectString("target file string").text;
      ExpectPunct(",");
      write.template_text = ExpectString("template string").text;
      ExpectPunct(")");
      ExpectPunct(";");
      block.writes.push_back(std::move(write));
    }
    ExpectPunct("}");
    ExpectPunct(";");
    return block;
  }

  std::optional<Initializer> TryParseInitializer() {
    Initializer init;
    init.location = SpanOf(Cur());
    if (IsKeyword("C_EXP")) {
      Advance();
      ExpectPunct("(");
      init.kind = InitializerKind::kCExp;
      init.text = ExpectString("C_EXP string argument").text;
      ExpectPunct(")");
      return init;
    }
    init.kind = InitializerKind::kLiteral;
    if (Cur().kind == TokenKind::kInteger || Cur().kind == TokenKind::kIdentifier) {
      init.text = Advance().text;
      return init;
    }
    if (IsPunct("-") && Next().kind == TokenKind::kInteger) {
      Advance();
      init.text = "-" + Advance().text;
      return init;
    }
    return std::nullopt;
  }

  Initializer ParseInitializer() {
    auto init = TryParseInitializer();
    if (!init) Expected("initializer (C_EXP(\"...\"), integer or identifier)");
    return *init;
  }

  CellDef ParseCell(std::optional<PluginDirective> directive) {
    CellDef cell;
    cell.generate_directive = std::move(directive);
    cell.location = SpanOf(ExpectKeyword("cell"));
    cell.celltype_name = ExpectIdentifier("celltype name").text;
    cell.name = ExpectIdentifier("cell name").text;
    ExpectPunct("{");
    while (!IsPunct("}")) {
      const Token& member = ExpectIdentifier("member name or '}'");
      ExpectPunct("=");
      if (Cur().kind == TokenKind::kIdentifier && Next().Is(TokenKind::kPunct, ".")) {
        Binding binding;
        binding.location = SpanOf(member);
        binding.call_port = member.text;
        binding.target_cell = Advance().text;
        Advance();  // '.'
        binding.target_entry_port = ExpectIdentifier("entry port name").text;
        cell.bindings.push_back(std::move(binding));
      } else {
        auto value = TryParseInitializer();
        if (!value) {
          Fail("expected-binding-target",
               "expected binding target or initializer after '=', found " +
                   Describe(Cur()),
               Cur());
        }
        cell.inits.push_back({member.text, std::move(*value), SpanOf(member)});
      }
      ExpectPunct(";");
    }
    ExpectPunct("}");
    ExpectPunct(";");
    return cell;
  }

  std::vector<Token> tokens_;
  std::string_view source_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult ParseUnit(std::string_view text, std::string_view source_name) {
  TokenizeResult lexed = Tokenize(text, source_name);
  if (HasErrors(lexed.diagnostics)) {
    return {std::nullopt, std::move(lexed.diagnostics)};
  }
  return Parser(std::move(lexed.tokens), text, source_name).Run();
}

}  // namespace tecsrs
