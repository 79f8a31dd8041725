#include "tecsrs/emit_core.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tecsrs/emit_rtos.h"
#include "tecsrs/naming.h"
#include "templates.h"

namespace tecsrs {
namespace {

using templates::Fill;

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string ParamList(const FunctionDecl& fn) {
  std::string out;
  for (const auto& param : fn.params) {
    out += ", " + param.name + ": " + naming::MapParamType(param);
  }
  return out;
}

// Ordered, de-duplicated module list for a `use crate::{...}` line.
class ModuleList {
 public:
  explicit ModuleList(std::string exclude) : exclude_(std::move(exclude)) {}

  void AddGroup(std::vector<std::string> group) {
    std::sort(group.begin(), group.end());
    for (auto& module : group) {
      if (module == exclude_ || !seen_.insert(module).second) continue;
      ordered_.push_back(module + "::*");
    }
  }

  std::string Render() const {
    if (ordered_.empty()) return {};
    return Fill(templates::kImportModules, {{"modules", Join(ordered_, ", ")}});
  }

 private:
  std::string exclude_;
  std::set<std::string> seen_;
  std::vector<std::string> ordered_;
};

std::vector<std::string> SignatureModules(const std::vector<PortDecl>& ports) {
  std::vector<std::string> modules;
  for (const auto& port : ports) modules.push_back(naming::ModuleName(port.signature_name));
  return modules;
}

std::string GenericParam(std::size_t index) {
  return index == 0 ? "T" : "T" + std::to_string(index + 1);
}

// Everything the definition templates need about one celltype.
class DefinitionWriter {
 public:
  DefinitionWriter(const ResolvedModel& model, std::size_t celltype,
                   Diagnostics& diags)
      : model_(model),
        rct_(model.celltypes[celltype]),
        ct_(rct_.def),
        diags_(diags),
        record_(naming::RecordName(ct_.name)),
        var_record_(naming::VarRecordName(ct_.name)) {
    for (const auto& var : ct_.vars) {
      var_types_.push_back(naming::DemangleVarType(var.type_text).value_or(var.type_text));
      var_lifetime_ = var_lifetime_ || var_types_.back().find("'a") != std::string::npos;
    }
    lifetime_ = !ct_.call_ports.empty() || !ct_.vars.empty();
    for (const auto& attr : ct_.attrs) {
      if (!attr.omit) attrs_.push_back(&attr);
    }
    if (!rct_.cells.empty()) {
      const ResolvedCell& first = model_.cells[rct_.cells.front()];
      for (const auto& binding : first.bindings) {
        const auto& target = model_.cells[binding.target_cell];
        target_types_.push_back(naming::EntryImplName(
            model_.TargetPort(binding).port_name, model_.CelltypeOf(target).name));
        target_modules_.push_back(naming::ModuleName(model_.CelltypeOf(target).name));
      }
    }
  }

  std::optional<GeneratedFile> Write() {
    std::vector<std::string> sections;
    sections.push_back(Imports());
    sections.push_back(MainRecord());
    if (!ct_.vars.empty()) sections.push_back(VarRecord());
    for (const auto& entry : ct_.entry_ports) sections.push_back(EntryRecord(entry));
    for (std::size_t cell : rct_.cells) AppendInstances(model_.cells[cell], sections);
    sections.push_back(Accessor());

    if (failed_) return std::nullopt;
    std::erase(sections, std::string());
    GeneratedFile file;
    file.path = naming::FileName(naming::FileKind::kDefinition, ct_.name);
    file.content = Join(sections, "\n");
    file.policy = WritePolicy::kOverwrite;
    file.role = FileRole::kDefinition;
    return file;
  }

 private:
  std::string VarRecordType() const {
    return var_record_ + (var_lifetime_ ? "<'a>" : "");
  }

  std::string Imports() const {
    std::string out;
    if (rct_.plugin == PluginKind::kItronrsGen && ReferencesKernelTypes(ct_)) {
      out += KernelPreamble();
    }
    if (!ct_.vars.empty()) out += templates::kImportMutex;
    ModuleList modules(naming::ModuleName(ct_.name));
    modules.AddGroup(SignatureModules(ct_.call_ports));
    modules.AddGroup(target_modules_);
    modules.AddGroup(SignatureModules(ct_.entry_ports));
    return out + modules.Render();
  }

  std::string MainRecord() const {
    std::string fields;
    for (std::size_t i = 0; i < ct_.call_ports.size(); ++i) {
      fields += Fill(templates::kField,
                     {{"name", naming::SnakeCase(ct_.call_ports[i].port_name)},
                      {"type", "&'a " + GenericParam(i)}});
    }
    for (const AttrDecl* attr : attrs_) {
      fields += Fill(templates::kField,
                     {{"name", attr->name}, {"type", naming::MapBaseType(attr->c_type)}});
    }
    if (!ct_.vars.empty()) {
      fields += Fill(templates::kField,
                     {{"name", "variable"}, {"type", "&'a Mutex<" + VarRecordType() + ">"}});
    }
    if (ct_.call_ports.empty()) {
      return Fill(templates::kRecord, {{"record", record_},
                                       {"generics", lifetime_ ? "<'a>" : " "},
                                       {"fields", fields}});
    }
    std::vector<std::string> params{"'a"};
    std::string bounds;
    for (std::size_t i = 0; i < ct_.call_ports.size(); ++i) {
      params.push_back(GenericParam(i));
      bounds += Fill(templates::kBound,
                     {{"param", GenericParam(i)},
                      {"trait", naming::ContractName(ct_.call_ports[i].signature_name)}});
    }
    return Fill(templates::kGenericRecord, {{"record", record_},
                                            {"params", Join(params, ", ")},
                                            {"bounds", bounds},
                                            {"fields", fields}});
  }

  std::string VarRecord() const {
    std::string fields;
    for (std::size_t i = 0; i < ct_.vars.size(); ++i) {
      fields += Fill(templates::kField, {{"name", ct_.vars[i].name}, {"type", var_types_[i]}});
    }
    return Fill(templates::kRecord, {{"record", var_record_},
                                     {"generics", var_lifetime_ ? "<'a>" : " "},
                                     {"fields", fields}});
  }

  // Main record as seen from an entry-port record.
  std::string CellType() const {
    if (!ct_.call_ports.empty()) {
      std::vector<std::string> args{"'a"};
      for (const auto& t : target_types_) args.push_back(t + "<'a>");
      return record_ + "<" + Join(args, ", ") + ">";
    }
    return lifetime_ ? record_ + "<'a>" : record_;
  }

  std::string EntryRecord(const PortDecl& entry) const {
    return Fill(templates::kEntryRecord,
                {{"entry", naming::EntryImplName(entry.port_name, ct_.name)},
                 {"cell_type", CellType()}});
  }

  std::string StaticType() const {
    if (ct_.call_ports.empty()) return record_;
    return record_ + "<" + Join(target_types_, ", ") + ">";
  }

  // Initializer text for `name`, cell value first, then the celltype default.
  std::optional<std::string> ValueOf(const ResolvedCell& rc, const std::string& name,
                                     const std::optional<Initializer>& fallback,
                                     std::string_view what) {
    const MemberInit* init = rc.cell.FindInit(name);
    const Initializer* value = init ? &init->value : fallback ? &*fallback : nullptr;
    if (!value) {
      diags_.Error("uninitialized-" + std::string(what),
                   std::string(what) + " '" + name + "' of cell '" + rc.cell.name +
                       "' has neither a cell initializer nor a default",
                   rc.cell.location);
      failed_ = true;
      return std::nullopt;
    }
    if (value->kind == InitializerKind::kLiteral) return value->text;
    MacroEnv env = MacroEnvForCell(model_, static_cast<std::size_t>(&rc - model_.cells.data()));
    env.attr_values.erase(name);  // an initializer may not refer to itself
    Substitution sub = SubstituteMacros(value->text, env);
    if (!sub.ok()) {
      diags_.Error("unresolved-macro",
                   "macro '$" + *sub.unresolved + "$' in the initializer of '" + name +
                       "' for cell '" + rc.cell.name + "' has no value",
                   value->location);
      failed_ = true;
      return std::nullopt;
    }
    return sub.text;
  }

  void AppendInstances(const ResolvedCell& rc, std::vector<std::string>& sections) {
    std::vector<std::string> entry_names;
    for (const auto& entry : ct_.entry_ports) entry_names.push_back(entry.port_name);
    const naming::StaticNames names = naming::StaticNamesFor(rc.cell.name, entry_names);

    std::string fields;
    for (const auto& binding : rc.bindings) {
      const auto& target = model_.cells[binding.target_cell];
      fields += Fill(templates::kInitField,
                     {{"name", naming::SnakeCase(ct_.call_ports[binding.call_port].port_name)},
                      {"value", "&" + naming::EntryInstanceName(
                                          model_.TargetPort(binding).port_name,
                                          target.cell.name)}});
    }
    for (const AttrDecl* attr : attrs_) {
      auto value = ValueOf(rc, attr->name, attr->initializer, "attribute");
      fields += Fill(templates::kInitField,
                     {{"name", attr->name}, {"value", value.value_or("")}});
    }
    if (!ct_.vars.empty()) {
      fields += Fill(templates::kInitField,
                     {{"name", "variable"}, {"value", "&" + names.var_instance}});
    }
    sections.push_back(Fill(templates::kInstance, {{"instance", names.instance},
                                                   {"type", StaticType()},
                                                   {"record", record_},
                                                   {"fields", fields}}));

    if (!ct_.vars.empty()) {
      std::string var_fields;
      for (const auto& var : ct_.vars) {
        auto value = ValueOf(rc, var.name, var.initializer, "variable");
        var_fields += Fill(templates::kInitField,
                           {{"name", var.name}, {"value", value.value_or("")}});
      }
      sections.push_back(Fill(templates::kVarInstance, {{"instance", names.var_instance},
                                                        {"record", var_record_},
                                                        {"fields", var_fields}}));
    }

    for (std::size_t i = 0; i < ct_.entry_ports.size(); ++i) {
      sections.push_back(Fill(
          templates::kEntryInstance,
          {{"instance", names.entry_instances[i]},
           {"entry", naming::EntryImplName(ct_.entry_ports[i].port_name, ct_.name)},
           {"cell", names.instance}}));
    }
  }

  std::string Accessor() const {
    std::vector<std::string> types;
    std::vector<std::string> values;
    std::string impl_generics;
    std::string type_args;
    if (lifetime_) {
      std::vector<std::string> bounded{"'a"};
      std::vector<std::string> args{"'a"};
      for (std::size_t i = 0; i < ct_.call_ports.size(); ++i) {
        bounded.push_back(GenericParam(i) + ": " +
                          naming::ContractName(ct_.call_ports[i].signature_name));
        args.push_back(GenericParam(i));
      }
      impl_generics = "<" + Join(bounded, ", ") + ">";
      type_args = "<" + Join(args, ", ") + ">";
    }
    for (std::size_t i = 0; i < ct_.call_ports.size(); ++i) {
      types.push_back("&" + GenericParam(i));
      values.push_back("&self." + naming::SnakeCase(ct_.call_ports[i].port_name));
    }
    for (const AttrDecl* attr : attrs_) {
      types.push_back("&" + naming::MapBaseType(attr->c_type));
      values.push_back("&self." + attr->name);
    }
    if (!ct_.vars.empty()) {
      types.push_back("&Mutex<" + VarRecordType() + ">");
      values.push_back("self.variable");
    }
    // A one-element tuple needs its trailing comma.
    const std::string trailer = types.size() == 1 ? "," : "";
    return Fill(templates::kAccessor,
                {{"impl_generics", impl_generics},
                 {"record", record_},
                 {"type_args", type_args},
                 {"fn_generics", var_lifetime_ ? "<'a>" : ""},
                 {"tuple_type", "(" + Join(types, ", ") + trailer + ")"},
                 {"tuple_value", "(" + Join(values, ", ") + trailer + ")"}});
  }

  const ResolvedModel& model_;
  const ResolvedCelltype& rct_;
  const CelltypeDef& ct_;
  Diagnostics& diags_;
  std::string record_;
  std::string var_record_;
  std::vector<std::string> var_types_;
  std::vector<const AttrDecl*> attrs_;
  std::vector<std::string> target_types_;
  std::vector<std::string> target_modules_;
  bool lifetime_ = false;
  bool var_lifetime_ = false;
  bool failed_ = false;
};

}  // namespace

GeneratedFile EmitContract(const SignatureDef& sig) {
  std::string methods;
  for (const auto& fn : sig.functions) {
    methods += Fill(templates::kTraitMethod, {{"name", fn.name},
                                              {"params", ParamList(fn)},
                                              {"ret", naming::ReturnSuffix(fn.return_type)}});
  }
  GeneratedFile file;
  file.path = naming::FileName(naming::FileKind::kContract, sig.name);
  file.content = Fill(templates::kTrait,
                      {{"trait", naming::ContractName(sig.name)}, {"methods", methods}});
  file.policy = WritePolicy::kOverwrite;
  file.role = FileRole::kContract;
  return file;
}

std::optional<GeneratedFile> EmitDefinition(const ResolvedModel& model,
                                            std::size_t celltype,
                                            Diagnostics& diags) {
  return DefinitionWriter(model, celltype, diags).Write();
}

GeneratedFile EmitSkeleton(const ResolvedModel& model, std::size_t celltype) {
  const CelltypeDef& ct = model.celltypes[celltype].def;

  std::string imports;
  if (!ct.vars.empty()) imports += templates::kImportMutex;
  ModuleList modules("");
  modules.AddGroup({naming::ModuleName(ct.name)});
  modules.AddGroup(SignatureModules(ct.call_ports));
  modules.AddGroup(SignatureModules(ct.entry_ports));
  imports += modules.Render();

  std::vector<std::string> sections{imports};
  for (const auto& entry : ct.entry_ports) {
    const SignatureDef& sig = model.SignatureNamed(entry.signature_name);
    std::string methods;
    for (const auto& fn : sig.functions) {
      methods += Fill(templates::kEntryImplMethod,
                      {{"name", fn.name},
                       {"params", ParamList(fn)},
                       {"ret", naming::ReturnSuffix(fn.return_type)}});
    }
    sections.push_back(Fill(templates::kEntryImpl,
                            {{"trait", naming::ContractName(sig.name)},
                             {"entry", naming::EntryImplName(entry.port_name, ct.name)},
                             {"methods", methods}}));
  }

  GeneratedFile file;
  file.path = naming::FileName(naming::FileKind::kSkeleton, ct.name);
  file.content = Join(sections, "\n");
  file.policy = WritePolicy::kSkipIfExists;
  file.role = FileRole::kSkeleton;
  return file;
}

}  // namespace tecsrs
