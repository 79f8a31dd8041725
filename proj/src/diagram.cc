#include "tecsrs/diagram.h"

#include <sstream>

namespace tecsrs {
namespace {

std::string Quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string EmitDiagram(const ResolvedModel& model) {
  std::ostringstream out;
  out << "digraph components {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (const auto& rc : model.cells) {
    out << "  " << Quoted(rc.cell.name) << " [label=\""
        << model.CelltypeOf(rc).name << "\\n" << rc.cell.name << "\"];\n";
  }
  for (const auto& rc : model.cells) {
    const CelltypeDef& ct = model.CelltypeOf(rc);
    for (const auto& b : rc.bindings) {
      const PortDecl& call = ct.call_ports[b.call_port];
      out << "  " << Quoted(rc.cell.name) << " -> "
          << Quoted(model.cells[b.target_cell].cell.name)
          << " [label=" << Quoted(call.signature_name)
          << ", taillabel=" << Quoted(call.port_name)
          << ", headlabel=" << Quoted(model.TargetPort(b).port_name) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tecsrs
