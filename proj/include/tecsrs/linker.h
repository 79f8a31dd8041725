#ifndef TECSRS_LINKER_H_
#define TECSRS_LINKER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tecsrs/model.h"
#include "tecsrs/naming.h"

namespace tecsrs {

// Indices refer into the owning ResolvedModel, so models stay copyable.
struct ResolvedBinding {
  std::size_t call_port = 0;          // into the cell's celltype call_ports
  std::size_t target_cell = 0;        // into ResolvedModel::cells
  std::size_t target_entry_port = 0;  // into the target celltype entry_ports
  SourceSpan location;
};

struct ResolvedCell {
  CellDef cell;
  std::size_t celltype = 0;  // into ResolvedModel::celltypes
  // One per call port, in call-port declaration order.
  std::vector<ResolvedBinding> bindings;
};

struct ResolvedCelltype {
  CelltypeDef def;
  // Governing generator plugin; nullopt means nothing is generated for it.
  std::optional<PluginKind> plugin;
  std::vector<std::size_t> cells;  // declaration order
};

struct ResolvedModel {
  std::vector<SignatureDef> signatures;
  std::vector<ResolvedCelltype> celltypes;
  std::vector<ResolvedCell> cells;
  std::map<std::string, std::size_t, std::less<>> signature_index;
  std::map<std::string, std::size_t, std::less<>> celltype_index;
  std::map<std::string, std::size_t, std::less<>> cell_index;

  const SignatureDef& SignatureNamed(std::string_view name) const;
  const CelltypeDef& CelltypeOf(const ResolvedCell& cell) const {
    return celltypes[cell.celltype].def;
  }
  // Entry port a binding lands on.
  const PortDecl& TargetPort(const ResolvedBinding& binding) const;
};

struct ResolveOptions {
  // Plugin for celltypes that carry no generate directive at all.
  std::optional<PluginKind> default_plugin;
};

struct ResolveResult {
  std::optional<ResolvedModel> model;  // present iff no Error diagnostics
  std::vector<Diagnostic> diagnostics;
};

// Links model-valid units into one component graph. Every failure is
// reported; resolution does not stop at the first one.
ResolveResult Resolve(std::span<const CdlUnit> units,
                      const ResolveOptions& options = {});

struct PlannedFile {
  naming::FileKind kind = naming::FileKind::kContract;
  std::string path;
  std::size_t index = 0;  // signature index for contracts, celltype otherwise
};

struct FactoryRequest {
  FactoryScope scope = FactoryScope::kPerCell;
  std::size_t celltype = 0;
  std::optional<std::size_t> cell;  // set for per-cell writes
  FactoryWrite write;
};

struct EmissionPlan {
  std::vector<PlannedFile> contract_files;
  std::vector<PlannedFile> definition_files;
  std::vector<PlannedFile> skeleton_files;
  // Per-celltype FACTORY writes first, then per-cell writes by cell order.
  std::vector<FactoryRequest> config_writes;

  std::vector<std::string> Paths() const;
};

// Decides the owed file set. Path collisions are reported as errors.
EmissionPlan PlanEmission(const ResolvedModel& model, Diagnostics& diags);

}  // namespace tecsrs

#endif  // TECSRS_LINKER_H_
