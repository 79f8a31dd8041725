#ifndef TECSRS_DIAGRAM_H_
#define TECSRS_DIAGRAM_H_

#include <string>

#include "tecsrs/linker.h"

namespace tecsrs {

// Graphviz component diagram: one box per cell labeled "celltype\ncell",
// one edge per binding labeled with its signature. Nodes follow cell
// declaration order and edges follow call-port order within each cell.
std::string EmitDiagram(const ResolvedModel& model);

}  // namespace tecsrs

#endif  // TECSRS_DIAGRAM_H_
