#include <sstream>

#include "tecsrs/frontend.h"

namespace tecsrs {
namespace {

constexpr std::string_view kIndent = "    ";

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string RenderInitializer(const Initializer& init) {
  if (init.kind == InitializerKind::kCExp) return "C_EXP(" + Quote(init.text) + ")";
  return init.text;
}

void RenderDirective(std::ostream& out,
                     const std::optional<PluginDirective>& directive) {
  if (!directive) return;
  out << "[generate(" << directive->plugin_name << ", "
      << Quote(directive->argument) << ")]\n";
}

void RenderSignature(std::ostream& out, const SignatureDef& sig) {
  out << "signature " << sig.name << " {\n";
  for (const auto& fn : sig.functions) {
    out << kIndent << fn.return_type << ' ' << fn.name << '(';
    if (fn.params.empty()) out << "void";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      const auto& p = fn.params[i];
      if (i > 0) out << ", ";
      out << (p.specifier == ParamSpecifier::kIn ? "[in] " : "[out] ") << p.c_type
          << std::string(static_cast<std::size_t>(p.pointer_depth), '*') << ' '
          << p.name;
    }
    out << ");\n";
  }
  out << "};\n";
}

void RenderPort(std::ostream& out, const PortDecl& port) {
  out << kIndent;
  if (port.is_inline && port.is_omit) {
    out << "[inline, omit] ";
  } else if (port.is_inline) {
    out << "[inline] ";
  } else if (port.is_omit) {
    out << "[omit] ";
  }
  out << (port.direction == PortDirection::kCall ? "call " : "entry ")
      << port.signature_name << ' ' << port.port_name << ";\n";
}

void RenderCelltype(std::ostream& out, const CelltypeDef& ct) {
  RenderDirective(out, ct.generate_directive);
  out << "celltype " << ct.name << " {\n";
  for (const auto& port : ct.call_ports) RenderPort(out, port);
  for (const auto& port : ct.entry_ports) RenderPort(out, port);
  if (!ct.attrs.empty()) {
    out << kIndent << "attr {\n";
    for (const auto& attr : ct.attrs) {
      out << kIndent << kIndent << (attr.omit ? "[omit] " : "") << attr.c_type
          << ' ' << attr.name;
      if (attr.initializer) out << " = " << RenderInitializer(*attr.initializer);
      out << ";\n";
    }
    out << kIndent << "};\n";
  }
  if (!ct.vars.empty()) {
    out << kIndent << "var {\n";
    for (const auto& var : ct.vars) {
      out << kIndent << kIndent << var.type_text << ' ' << var.name;
      if (var.initializer) out << " = " << RenderInitializer(*var.initializer);
      out << ";\n";
    }
    out << kIndent << "};\n";
  }
  for (const auto& block : ct.factory_blocks) {
    out << kIndent
        << (block.scope == FactoryScope::kPerCell ? "factory" : "FACTORY")
        << " {\n";
    for (const auto& write : block.writes) {
      out << kIndent << kIndent << "write(" << Quote(write.target_file) << ", "
          << Quote(write.template_text) << ");\n";
    }
    out << kIndent << "};\n";
  }
  out << "};\n";
}

void RenderCell(std::ostream& out, const CellDef& cell) {
  RenderDirective(out, cell.generate_directive);
  out << "cell " << cell.celltype_name << ' ' << cell.name << " {\n";
  for (const auto& b : cell.bindings) {
    out << kIndent << b.call_port << " = " << b.target_cell << '.'
        << b.target_entry_port << ";\n";
  }
  for (const auto& init : cell.inits) {
    out << kIndent << init.name << " = " << RenderInitializer(init.value)
        << ";\n";
  }
  out << "};\n";
}

}  // namespace

std::string RenderUnit(const CdlUnit& unit) {
  std::ostringstream out;
  bool first = true;
  auto separate = [&] {
    if (!first) out << '\n';
    first = false;
  };
  for (const auto& sig : unit.signatures) {
    separate();
    RenderSignature(out, sig);
  }
  for (const auto& ct : unit.celltypes) {
    separate();
    RenderCelltype(out, ct);
  }
  for (const auto& cell : unit.cells) {
    separate();
    RenderCell(out, cell);
  }
  return out.str();
}

}  // namespace tecsrs
