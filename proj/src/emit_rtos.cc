#include "tecsrs/emit_rtos.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <iterator>

#include "tecsrs/naming.h"

namespace tecsrs {
namespace {

constexpr std::string_view kPreamble =
    "use crate::kernel_cfg::*;\n"
    "use itron::abi::*;\n"
    "use itron::TaskRef::*;\n";

// Types provided by the kernel wrapper crate or its ABI module.
constexpr std::array<std::string_view, 10> kKernelTypes = {
    "TaskRef", "ID", "ATR", "PRI", "RELTIM", "STAT", "ER", "ER_UINT", "TMO", "FLGPTN",
};

bool MentionsKernelType(std::string_view type_text) {
  std::size_t i = 0;
  while (i < type_text.size()) {
    if (!std::isalnum(static_cast<unsigned char>(type_text[i])) && type_text[i] != '_') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < type_text.size() &&
           (std::isalnum(static_cast<unsigned char>(type_text[j])) || type_text[j] == '_')) {
      ++j;
    }
    const std::string_view word = type_text.substr(i, j - i);
    for (auto kernel : kKernelTypes) {
      if (word == kernel) return true;
    }
    i = j;
  }
  return false;
}

}  // namespace

Substitution SubstituteMacros(std::string_view tmpl, const MacroEnv& env) {
  Substitution result;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '$') {
      result.text.push_back(tmpl[i++]);
      continue;
    }
    const std::size_t close = tmpl.find('$', i + 1);
    if (close == std::string_view::npos) {
      if (!result.unresolved) result.unresolved = std::string(tmpl.substr(i + 1));
      result.text.append(tmpl.substr(i));
      break;
    }
    const std::string_view name = tmpl.substr(i + 1, close - i - 1);
    const std::string* value = nullptr;
    if (name == "ct") {
      value = &env.ct;
    } else if (name == "cell") {
      value = env.cell ? &*env.cell : nullptr;
    } else if (auto it = env.attr_values.find(name); it != env.attr_values.end()) {
      value = &it->second;
    }
    if (value) {
      result.text += *value;
    } else {
      if (!result.unresolved) result.unresolved = std::string(name);
      result.text.append(tmpl.substr(i, close - i + 1));
    }
    i = close + 1;
  }
  return result;
}

MacroEnv MacroEnvForCelltype(const ResolvedModel& model, std::size_t celltype) {
  MacroEnv env;
  env.ct = model.celltypes[celltype].def.name;
  return env;
}

MacroEnv MacroEnvForCell(const ResolvedModel& model, std::size_t cell) {
  const ResolvedCell& rc = model.cells[cell];
  const CelltypeDef& ct = model.CelltypeOf(rc);
  MacroEnv env;
  env.ct = ct.name;
  env.cell = rc.cell.name;
  for (const auto& attr : ct.attrs) {
    if (const MemberInit* init = rc.cell.FindInit(attr.name)) {
      env.attr_values.emplace(attr.name, init->value.text);
    } else if (attr.initializer) {
      env.attr_values.emplace(attr.name, attr.initializer->text);
    }
  }
  return env;
}

std::string_view KernelPreamble() { return kPreamble; }

bool ReferencesKernelTypes(const CelltypeDef& ct) {
  for (const auto& attr : ct.attrs) {
    if (!attr.omit && MentionsKernelType(attr.c_type)) return true;
  }
  for (const auto& var : ct.vars) {
    if (MentionsKernelType(naming::DemangleVarType(var.type_text).value_or(var.type_text))) {
      return true;
    }
  }
  return false;
}

std::string PrependPreamble(std::string_view content) {
  if (content.starts_with(kPreamble)) return std::string(content);
  return std::string(kPreamble) + std::string(content);
}

std::vector<ConfigWrite> RunFactory(const ResolvedModel& model,
                                    const EmissionPlan& plan, Diagnostics& diags) {
  std::vector<ConfigWrite> writes;
  for (const auto& request : plan.config_writes) {
    const MacroEnv env = request.cell ? MacroEnvForCell(model, *request.cell)
                                      : MacroEnvForCelltype(model, request.celltype);
    const Substitution target = SubstituteMacros(request.write.target_file, env);
    const Substitution line = SubstituteMacros(request.write.template_text, env);
    const Substitution& bad = target.ok() ? line : target;
    if (!bad.ok()) {
      const std::string owner =
          request.cell ? "cell '" + *env.cell + "'" : "celltype '" + env.ct + "'";
      diags.Error("unresolved-macro",
                  "macro '$" + *bad.unresolved + "$' in a write() of " + owner +
                      " has no value",
                  request.write.location);
      continue;
    }
    writes.push_back({target.text, line.text});
  }
  return writes;
}

std::vector<GeneratedFile> ConfigFiles(const std::vector<ConfigWrite>& writes) {
  std::vector<GeneratedFile> files;
  for (const auto& write : writes) {
    auto it = std::find_if(files.begin(), files.end(), [&](const GeneratedFile& f) {
      return f.path == write.target_file;
    });
    if (it == files.end()) {
      files.push_back({write.target_file, {}, WritePolicy::kOverwrite, FileRole::kConfig});
      it = std::prev(files.end());
    }
    it->content += write.rendered_line + "\n";
  }
  return files;
}

}  // namespace tecsrs
