#ifndef TECSRS_MODEL_H_
#define TECSRS_MODEL_H_

// Abstract syntax of the supported CDL subset, plus diagnostics.
//
// Model types are plain values. Source spans are carried for diagnostics but
// never take part in equality, so a unit parsed from canonical text compares
// equal to the unit it was rendered from.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tecsrs {

struct SourceSpan {
  std::string file;
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceSpan location;

  // `file:line:col: severity[code]: message`
  std::string Format() const;
};

// Append-only collector shared by every pipeline stage.
class Diagnostics {
 public:
  void Error(std::string code, std::string message, SourceSpan at);
  void Warning(std::string code, std::string message, SourceSpan at);
  void Append(std::span<const Diagnostic> more);

  bool has_errors() const { return error_count_ > 0; }
  int error_count() const { return error_count_; }
  const std::vector<Diagnostic>& all() const { return items_; }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<Diagnostic> items_;
  int error_count_ = 0;
};

bool HasErrors(std::span<const Diagnostic> diagnostics);

enum class ParamSpecifier { kIn, kOut };

struct ParamDecl {
  ParamSpecifier specifier = ParamSpecifier::kIn;
  std::string c_type;
  int pointer_depth = 0;
  std::string name;
  SourceSpan location;

  bool operator==(const ParamDecl&) const = default;
};

struct FunctionDecl {
  std::string name;
  std::string return_type;
  std::vector<ParamDecl> params;
  SourceSpan location;

  bool operator==(const FunctionDecl&) const = default;
};

struct SignatureDef {
  std::string name;
  std::vector<FunctionDecl> functions;
  SourceSpan location;

  bool operator==(const SignatureDef&) const = default;
};

enum class PortDirection { kCall, kEntry };

struct PortDecl {
  PortDirection direction = PortDirection::kCall;
  std::string signature_name;
  std::string port_name;
  bool is_inline = false;
  bool is_omit = false;
  SourceSpan location;

  bool operator==(const PortDecl&) const = default;
};

enum class InitializerKind { kCExp, kLiteral };

// For kCExp, `text` is the decoded string argument, `$macro$` holes intact.
// For kLiteral, `text` is the literal lexeme (integer or identifier).
struct Initializer {
  InitializerKind kind = InitializerKind::kLiteral;
  std::string text;
  SourceSpan location;

  bool operator==(const Initializer&) const = default;
};

struct AttrDecl {
  std::string name;
  std::string c_type;
  std::optional<Initializer> initializer;
  bool omit = false;
  SourceSpan location;

  bool operator==(const AttrDecl&) const = default;
};

struct VarDecl {
  std::string name;
  // Either a C type name or a mangled type such as Option_Ref_a_mut__x__.
  std::string type_text;
  std::optional<Initializer> initializer;
  SourceSpan location;

  bool operator==(const VarDecl&) const = default;
};

enum class FactoryScope { kPerCell, kPerCelltype };

struct FactoryWrite {
  std::string target_file;
  std::string template_text;
  SourceSpan location;

  bool operator==(const FactoryWrite&) const = default;
};

struct FactoryBlock {
  FactoryScope scope = FactoryScope::kPerCell;
  std::vector<FactoryWrite> writes;
  SourceSpan location;

  bool operator==(const FactoryBlock&) const = default;
};

enum class PluginKind { kRustGen, kItronrsGen };

std::optional<PluginKind> PluginFromName(std::string_view name);
std::string_view PluginName(PluginKind plugin);

struct PluginDirective {
  std::string plugin_name;
  std::string argument;
  SourceSpan location;

  bool operator==(const PluginDirective&) const = default;
};

struct CelltypeDef {
  std::string name;
  std::vector<PortDecl> call_ports;
  std::vector<PortDecl> entry_ports;
  std::vector<AttrDecl> attrs;
  std::vector<VarDecl> vars;
  std::vector<FactoryBlock> factory_blocks;
  std::optional<PluginDirective> generate_directive;
  SourceSpan location;

  bool operator==(const CelltypeDef&) const = default;

  const PortDecl* FindCallPort(std::string_view port) const;
  const PortDecl* FindEntryPort(std::string_view port) const;
  const AttrDecl* FindAttr(std::string_view attr) const;
  const VarDecl* FindVar(std::string_view var) const;
};

struct Binding {
  std::string call_port;
  std::string target_cell;
  std::string target_entry_port;
  SourceSpan location;

  bool operator==(const Binding&) const = default;
};

struct MemberInit {
  std::string name;
  Initializer value;
  SourceSpan location;

  bool operator==(const MemberInit&) const = default;
};

struct CellDef {
  std::string name;
  std::string celltype_name;
  std::vector<Binding> bindings;
  std::vector<MemberInit> inits;
  std::optional<PluginDirective> generate_directive;
  SourceSpan location;

  bool operator==(const CellDef&) const = default;

  const Binding* FindBinding(std::string_view call_port) const;
  const MemberInit* FindInit(std::string_view member) const;
};

struct CdlUnit {
  std::string source_name;
  std::vector<SignatureDef> signatures;
  std::vector<CelltypeDef> celltypes;
  std::vector<CellDef> cells;

  bool operator==(const CdlUnit& other) const {
    return signatures == other.signatures && celltypes == other.celltypes &&
           cells == other.cells;
  }
};

// Structural checks that need no cross-unit context: duplicate names,
// `[out]` without a pointer, pointer depth, unknown plugins, macro balance.
std::vector<Diagnostic> ValidateUnit(const CdlUnit& unit);

// True when every `$` in `text` is part of a closed `$name$` pair.
bool MacroHolesBalanced(std::string_view text);

}  // namespace tecsrs

#endif  // TECSRS_MODEL_H_
