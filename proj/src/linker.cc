#include "tecsrs/linker.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tecsrs {
namespace {

constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);

template <typename Map>
std::size_t Lookup(const Map& index, std::string_view name) {
  auto it = index.find(name);
  return it == index.end() ? kUnresolved : it->second;
}

class Linker {
 public:
  Linker(std::span<const CdlUnit> units, const ResolveOptions& options)
      : units_(units), options_(options) {}

  ResolveResult Run() {
    CollectSignatures();
    CollectCelltypes();
    CollectCells();
    for (std::size_t i = 0; i < cells_.size(); ++i) ResolveCell(i);
    AssignPlugins();
    CheckHomogeneousBindings();
    CheckInstantiable();

    ResolveResult result;
    result.diagnostics = diags_.all();
    if (diags_.has_errors()) return result;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      model_.celltypes[cells_[i].celltype].cells.push_back(i);
    }
    model_.cells = std::move(cells_);
    result.model = std::move(model_);
    return result;
  }

 private:
  void CollectSignatures() {
    for (const auto& unit : units_) {
      for (const auto& sig : unit.signatures) {
        if (model_.signature_index.count(sig.name)) {
          diags_.Error("duplicate-definition",
                       "signature '" + sig.name + "' is defined more than once",
                       sig.location);
          continue;
        }
        model_.signature_index.emplace(sig.name, model_.signatures.size());
        model_.signatures.push_back(sig);
      }
    }
  }

  void CollectCelltypes() {
    for (const auto& unit : units_) {
      for (const auto& ct : unit.celltypes) {
        if (model_.celltype_index.count(ct.name)) {
          diags_.Error("duplicate-definition",
                       "celltype '" + ct.name + "' is defined more than once",
                       ct.location);
          continue;
        }
        for (const auto* ports : {&ct.call_ports, &ct.entry_ports}) {
          for (const auto& port : *ports) {
            if (!model_.signature_index.count(port.signature_name)) {
              diags_.Error("unknown-signature",
                           "port '" + port.port_name + "' uses unknown signature '" +
                               port.signature_name + "'",
                           port.location);
            }
          }
        }
        model_.celltype_index.emplace(ct.name, model_.celltypes.size());
        model_.celltypes.push_back({ct, std::nullopt, {}});
      }
    }
  }

  void CollectCells() {
    for (const auto& unit : units_) {
      for (const auto& cell : unit.cells) {
        if (model_.cell_index.count(cell.name)) {
          diags_.Error("duplicate-definition",
                       "cell '" + cell.name + "' is defined more than once",
                       cell.location);
          continue;
        }
        const std::size_t ct = Lookup(model_.celltype_index, cell.celltype_name);
        if (ct == kUnresolved) {
          diags_.Error("unknown-celltype",
                       "cell '" + cell.name + "' uses unknown celltype '" +
                           cell.celltype_name + "'",
                       cell.location);
        }
        model_.cell_index.emplace(cell.name, cells_.size());
        cells_.push_back({cell, ct, {}});
      }
    }
  }

  void ResolveCell(std::size_t index) {
    ResolvedCell& rc = cells_[index];
    if (rc.celltype == kUnresolved) return;
    const CelltypeDef& ct = model_.celltypes[rc.celltype].def;

    std::set<std::string> bound;
    for (const auto& binding : rc.cell.bindings) {
      const PortDecl* call = ct.FindCallPort(binding.call_port);
      if (!call) {
        diags_.Error("unknown-call-port",
                     "celltype '" + ct.name + "' has no call port '" +
                         binding.call_port + "'",
                     binding.location);
        continue;
      }
      bound.insert(binding.call_port);
      const std::size_t target = Lookup(model_.cell_index, binding.target_cell);
      if (target == kUnresolved) {
        diags_.Error("unknown-cell",
                     "binding target cell '" + binding.target_cell + "' does not exist",
                     binding.location);
        continue;
      }
      if (cells_[target].celltype == kUnresolved) continue;
      const CelltypeDef& target_ct = model_.celltypes[cells_[target].celltype].def;
      const PortDecl* entry = target_ct.FindEntryPort(binding.target_entry_port);
      if (!entry) {
        diags_.Error("unknown-entry-port",
                     "cell '" + binding.target_cell + "' has no entry port '" +
                         binding.target_entry_port + "'",
                     binding.location);
        continue;
      }
      if (entry->signature_name != call->signature_name) {
        diags_.Error("signature-mismatch",
                     "call port '" + binding.call_port + "' expects signature '" +
                         call->signature_name + "' but '" + binding.target_cell +
                         "." + binding.target_entry_port + "' provides '" +
                         entry->signature_name + "'",
                     binding.location);
        continue;
      }
      rc.bindings.push_back(
          {static_cast<std::size_t>(call - ct.call_ports.data()), target,
           static_cast<std::size_t>(entry - target_ct.entry_ports.data()),
           binding.location});
    }

    for (const auto& port : ct.call_ports) {
      if (!bound.count(port.port_name)) {
        diags_.Error("unbound-call-port",
                     "call port '" + port.port_name + "' of cell '" +
                         rc.cell.name + "' is not bound",
                     rc.cell.location);
      }
    }
    std::sort(rc.bindings.begin(), rc.bindings.end(),
              [](const ResolvedBinding& a, const ResolvedBinding& b) {
                return a.call_port < b.call_port;
              });

    for (const auto& init : rc.cell.inits) {
      if (ct.FindAttr(init.name) || ct.FindVar(init.name)) continue;
      if (ct.FindCallPort(init.name)) {
        diags_.Error("expected-binding-target",
                     "call port '" + init.name +
                         "' must be bound to a Cell.entryPort target",
                     init.location);
      } else {
        diags_.Error("unknown-member",
                     "celltype '" + ct.name + "' has no attribute or variable '" +
                         init.name + "'",
                     init.location);
      }
    }
  }

  void AssignPlugins() {
    for (auto& rct : model_.celltypes) {
      std::optional<PluginKind> plugin;
      const PluginDirective* source = nullptr;
      if (rct.def.generate_directive) {
        plugin = PluginFromName(rct.def.generate_directive->plugin_name);
        source = &*rct.def.generate_directive;
      }
      for (const auto& rc : cells_) {
        if (rc.celltype == kUnresolved ||
            &model_.celltypes[rc.celltype] != &rct || !rc.cell.generate_directive) {
          continue;
        }
        const auto& directive = *rc.cell.generate_directive;
        const auto cell_plugin = PluginFromName(directive.plugin_name);
        if (!plugin) {
          plugin = cell_plugin;
          source = &directive;
        } else if (cell_plugin != plugin) {
          diags_.Error("conflicting-plugin",
                       "cell '" + rc.cell.name + "' requests " +
                           directive.plugin_name + " but " + source->plugin_name +
                           " already governs celltype '" + rct.def.name + "'",
                       directive.location);
        }
      }
      rct.plugin = plugin ? plugin : options_.default_plugin;
    }
  }

  // Every cell of a celltype must bind a given call port to the same entry
  // port of the same target celltype, so the definition file can name one
  // concrete entry-port type.
  void CheckHomogeneousBindings() {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>
        first_target;
    for (const auto& rc : cells_) {
      if (rc.celltype == kUnresolved) continue;
      for (const auto& b : rc.bindings) {
        const std::pair target{cells_[b.target_cell].celltype, b.target_entry_port};
        auto [it, inserted] = first_target.emplace(std::pair{rc.celltype, b.call_port}, target);
        if (!inserted && it->second != target) {
          const auto& ct = model_.celltypes[rc.celltype].def;
          diags_.Error("heterogeneous-binding-unsupported",
                       "cells of celltype '" + ct.name + "' bind call port '" +
                           ct.call_ports[b.call_port].port_name +
                           "' to different entry-port types",
                       b.location);
        }
      }
    }
  }

  // Entry-port records name the concrete main-record instantiation, which is
  // only known once a cell fixes the call-port targets.
  void CheckInstantiable() {
    for (std::size_t i = 0; i < model_.celltypes.size(); ++i) {
      const auto& rct = model_.celltypes[i];
      if (!rct.plugin || rct.def.call_ports.empty() || rct.def.entry_ports.empty()) {
        continue;
      }
      bool has_cell = false;
      for (const auto& rc : cells_) has_cell = has_cell || rc.celltype == i;
      if (!has_cell) {
        diags_.Error("uninstantiated-celltype",
                     "celltype '" + rct.def.name +
                         "' has call and entry ports but no cell fixes its "
                         "call-port targets",
                     rct.def.location);
      }
    }
  }

  std::span<const CdlUnit> units_;
  const ResolveOptions& options_;
  ResolvedModel model_;
  std::vector<ResolvedCell> cells_;
  Diagnostics diags_;
};

}  // namespace

const SignatureDef& ResolvedModel::SignatureNamed(std::string_view name) const {
  auto it = signature_index.find(name);
  if (it == signature_index.end()) {
    throw std::out_of_range("unknown signature " + std::string(name));
  }
  return signatures[it->second];
}

const PortDecl& ResolvedModel::TargetPort(const ResolvedBinding& binding) const {
  return CelltypeOf(cells[binding.target_cell]).entry_ports[binding.target_entry_port];
}

ResolveResult Resolve(std::span<const CdlUnit> units,
                      const ResolveOptions& options) {
  return Linker(units, options).Run();
}

std::vector<std::string> EmissionPlan::Paths() const {
  std::vector<std::string> paths;
  for (const auto* files : {&contract_files, &definition_files, &skeleton_files}) {
    for (const auto& f : *files) paths.push_back(f.path);
  }
  return paths;
}

EmissionPlan PlanEmission(const ResolvedModel& model, Diagnostics& diags) {
  using naming::FileKind;
  EmissionPlan plan;

  std::set<std::size_t> referenced;
  for (const auto& rct : model.celltypes) {
    if (!rct.plugin) continue;
    for (const auto* ports : {&rct.def.call_ports, &rct.def.entry_ports}) {
      for (const auto& port : *ports) {
        referenced.insert(model.signature_index.find(port.signature_name)->second);
      }
    }
  }
  for (std::size_t sig : referenced) {
    plan.contract_files.push_back(
        {FileKind::kContract,
         naming::FileName(FileKind::kContract, model.signatures[sig].name), sig});
  }

  for (std::size_t i = 0; i < model.celltypes.size(); ++i) {
    const auto& rct = model.celltypes[i];
    if (!rct.plugin) continue;
    plan.definition_files.push_back(
        {FileKind::kDefinition, naming::FileName(FileKind::kDefinition, rct.def.name), i});
    if (!rct.def.entry_ports.empty()) {
      plan.skeleton_files.push_back(
          {FileKind::kSkeleton, naming::FileName(FileKind::kSkeleton, rct.def.name), i});
    }
    if (rct.plugin == PluginKind::kRustGen) {
      for (const auto& block : rct.def.factory_blocks) {
        diags.Warning("factory-ignored",
                      "factory blocks are processed by ItronrsGenPlugin only; "
                      "celltype '" + rct.def.name + "' uses RustGenPlugin",
                      block.location);
      }
      continue;
    }
    for (const auto& block : rct.def.factory_blocks) {
      if (block.scope != FactoryScope::kPerCelltype) continue;
      for (const auto& write : block.writes) {
        plan.config_writes.push_back({FactoryScope::kPerCelltype, i, std::nullopt, write});
      }
    }
  }

  for (std::size_t c = 0; c < model.cells.size(); ++c) {
    const std::size_t ct = model.cells[c].celltype;
    if (model.celltypes[ct].plugin != PluginKind::kItronrsGen) continue;
    for (const auto& block : model.celltypes[ct].def.factory_blocks) {
      if (block.scope != FactoryScope::kPerCell) continue;
      for (const auto& write : block.writes) {
        plan.config_writes.push_back({FactoryScope::kPerCell, ct, c, write});
      }
    }
  }

  std::set<std::string> seen;
  for (const auto& path : plan.Paths()) {
    if (!seen.insert(path).second) {
      diags.Error("file-name-collision",
                  "two generated files would both be named '" + path + "'", {});
    }
  }
  return plan;
}

}  // namespace tecsrs
