#include "tecsrs/model.h"

#include <algorithm>
#include <set>
#include <utility>

#include "tecsrs/naming.h"

namespace tecsrs {

std::string Diagnostic::Format() const {
  std::string out = location.file.empty() ? "<input>" : location.file;
  out += ':' + std::to_string(location.line) + ':' +
         std::to_string(location.column) + ": ";
  out += severity == Severity::kError ? "error" : "warning";
  out += '[' + code + "]: " + message;
  return out;
}

void Diagnostics::Error(std::string code, std::string message, SourceSpan at) {
  items_.push_back(
      {Severity::kError, std::move(code), std::move(message), std::move(at)});
  ++error_count_;
}

void Diagnostics::Warning(std::string code, std::string message,
                          SourceSpan at) {
  items_.push_back(
      {Severity::kWarning, std::move(code), std::move(message), std::move(at)});
}

void Diagnostics::Append(std::span<const Diagnostic> more) {
  for (const auto& d : more) {
    items_.push_back(d);
    if (d.severity == Severity::kError) ++error_count_;
  }
}

bool HasErrors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

std::optional<PluginKind> PluginFromName(std::string_view name) {
  if (name == "RustGenPlugin") return PluginKind::kRustGen;
  if (name == "ItronrsGenPlugin") return PluginKind::kItronrsGen;
  return std::nullopt;
}

std::string_view PluginName(PluginKind plugin) {
  switch (plugin) {
    case PluginKind::kRustGen:
      return "RustGenPlugin";
    case PluginKind::kItronrsGen:
      return "ItronrsGenPlugin";
  }
  return {};
}

namespace {

template <typename T, typename Pred>
const T* FindIn(const std::vector<T>& items, Pred pred) {
  auto it = std::find_if(items.begin(), items.end(), pred);
  return it == items.end() ? nullptr : &*it;
}

// Reports the second and later occurrence of each name.
class NameScope {
 public:
  NameScope(Diagnostics& diags, std::string code, std::string what)
      : diags_(diags), code_(std::move(code)), what_(std::move(what)) {}

  void Add(const std::string& name, const SourceSpan& at) {
    if (!seen_.insert(name).second) {
      diags_.Error(code_, "duplicate " + what_ + " '" + name + "'", at);
    }
  }

 private:
  Diagnostics& diags_;
  std::string code_;
  std::string what_;
  std::set<std::string> seen_;
};

void CheckInitializer(const Initializer& init, Diagnostics& diags) {
  if (init.kind == InitializerKind::kCExp && !MacroHolesBalanced(init.text)) {
    diags.Error("unbalanced-macro",
                "C_EXP text has an unterminated '$' macro hole", init.location);
  }
}

void CheckDirective(const std::optional<PluginDirective>& directive,
                    Diagnostics& diags) {
  if (directive && !PluginFromName(directive->plugin_name)) {
    diags.Error("unknown-plugin",
                "unknown generator plugin '" + directive->plugin_name + "'",
                directive->location);
  }
}

void ValidateSignature(const SignatureDef& sig, Diagnostics& diags) {
  if (!naming::HasSuffixAfterMarker(sig.name)) {
    diags.Error("empty-name-suffix",
                "signature name '" + sig.name +
                    "' needs at least one character after its marker",
                sig.location);
  }
  NameScope functions(diags, "duplicate-function", "function");
  for (const auto& fn : sig.functions) {
    functions.Add(fn.name, fn.location);
    NameScope params(diags, "duplicate-parameter", "parameter");
    for (const auto& param : fn.params) {
      params.Add(param.name, param.location);
      if (param.pointer_depth > 1) {
        diags.Error("pointer-depth-unsupported",
                    "parameter '" + param.name +
                        "' has more than one pointer level",
                    param.location);
      } else if (param.specifier == ParamSpecifier::kOut &&
                 param.pointer_depth < 1) {
        diags.Error("out-requires-pointer",
                    "[out] parameter '" + param.name + "' must be a pointer",
                    param.location);
      }
    }
  }
}

void ValidateCelltype(const CelltypeDef& ct, Diagnostics& diags) {
  if (!naming::HasSuffixAfterMarker(ct.name)) {
    diags.Error("empty-name-suffix",
                "celltype name '" + ct.name +
                    "' needs at least one character after its marker",
                ct.location);
  }
  CheckDirective(ct.generate_directive, diags);
  // Ports, attrs and vars share one namespace: cell bodies refer to all of
  // them by bare name.
  NameScope members(diags, "duplicate-member", "celltype member");
  for (const auto& port : ct.call_ports) members.Add(port.port_name, port.location);
  for (const auto& port : ct.entry_ports) members.Add(port.port_name, port.location);
  for (const auto& attr : ct.attrs) {
    members.Add(attr.name, attr.location);
    if (attr.initializer) CheckInitializer(*attr.initializer, diags);
  }
  for (const auto& var : ct.vars) {
    members.Add(var.name, var.location);
    if (var.initializer) CheckInitializer(*var.initializer, diags);
    if (!naming::DemangleVarType(var.type_text)) {
      diags.Error("unrecognized-mangling",
                  "variable type '" + var.type_text + "' cannot be demangled",
                  var.location);
    }
  }
  for (const auto& block : ct.factory_blocks) {
    for (const auto& write : block.writes) {
      if (write.target_file.empty()) {
        diags.Error("empty-write-target", "write() target file is empty",
                    write.location);
      }
      if (!MacroHolesBalanced(write.target_file) ||
          !MacroHolesBalanced(write.template_text)) {
        diags.Error("unbalanced-macro",
                    "write() text has an unterminated '$' macro hole",
                    write.location);
      }
    }
  }
}

void ValidateCell(const CellDef& cell, Diagnostics& diags) {
  CheckDirective(cell.generate_directive, diags);
  NameScope bound(diags, "duplicate-binding", "binding for call port");
  for (const auto& binding : cell.bindings) {
    bound.Add(binding.call_port, binding.location);
  }
  NameScope inits(diags, "duplicate-initializer", "initializer for");
  for (const auto& init : cell.inits) {
    inits.Add(init.name, init.location);
    CheckInitializer(init.value, diags);
  }
}

}  // namespace

const PortDecl* CelltypeDef::FindCallPort(std::string_view port) const {
  return FindIn(call_ports, [&](const PortDecl& p) { return p.port_name == port; });
}

const PortDecl* CelltypeDef::FindEntryPort(std::string_view port) const {
  return FindIn(entry_ports, [&](const PortDecl& p) { return p.port_name == port; });
}

const AttrDecl* CelltypeDef::FindAttr(std::string_view attr) const {
  return FindIn(attrs, [&](const AttrDecl& a) { return a.name == attr; });
}

const VarDecl* CelltypeDef::FindVar(std::string_view var) const {
  return FindIn(vars, [&](const VarDecl& v) { return v.name == var; });
}

const Binding* CellDef::FindBinding(std::string_view call_port) const {
  return FindIn(bindings, [&](const Binding& b) { return b.call_port == call_port; });
}

const MemberInit* CellDef::FindInit(std::string_view member) const {
  return FindIn(inits, [&](const MemberInit& i) { return i.name == member; });
}

bool MacroHolesBalanced(std::string_view text) {
  return std::count(text.begin(), text.end(), '$') % 2 == 0;
}

std::vector<Diagnostic> ValidateUnit(const CdlUnit& unit) {
  Diagnostics diags;
  NameScope signatures(diags, "duplicate-definition", "signature");
  for (const auto& sig : unit.signatures) {
    signatures.Add(sig.name, sig.location);
    ValidateSignature(sig, diags);
  }
  NameScope celltypes(diags, "duplicate-definition", "celltype");
  for (const auto& ct : unit.celltypes) {
    celltypes.Add(ct.name, ct.location);
    ValidateCelltype(ct, diags);
  }
  NameScope cells(diags, "duplicate-definition", "cell");
  for (const auto& cell : unit.cells) {
    cells.Add(cell.name, cell.location);
    ValidateCell(cell, diags);
  }
  return diags.all();
}

}  // namespace tecsrs
