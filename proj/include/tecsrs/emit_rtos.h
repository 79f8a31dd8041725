#ifndef TECSRS_EMIT_RTOS_H_
#define TECSRS_EMIT_RTOS_H_

// RTOS glue on top of the core emitter: `$macro$` substitution, the kernel
// wrapper preamble, and factory-driven configuration writes.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecsrs/generated_file.h"
#include "tecsrs/linker.h"

namespace tecsrs {

// Values visible to `$...$` holes. `$ct$` and `$cell$` are built in; any
// other hole names an attribute of the cell (omitted attributes included).
struct MacroEnv {
  std::string ct;
  std::optional<std::string> cell;  // absent for per-celltype FACTORY writes
  std::map<std::string, std::string, std::less<>> attr_values;
};

struct Substitution {
  std::string text;
  std::optional<std::string> unresolved;  // first hole that had no value

  bool ok() const { return !unresolved.has_value(); }
};

// Single left-to-right pass; substituted text is not rescanned.
Substitution SubstituteMacros(std::string_view tmpl, const MacroEnv& env);

// Attribute values of `cell` (cell initializer, else celltype default),
// unsubstituted.
MacroEnv MacroEnvForCell(const ResolvedModel& model, std::size_t cell);
MacroEnv MacroEnvForCelltype(const ResolvedModel& model, std::size_t celltype);

// Import lines for the kernel wrapper crate and kernel object IDs.
std::string_view KernelPreamble();

// True when an emitted record field of `ct` has a kernel wrapper type.
bool ReferencesKernelTypes(const CelltypeDef& ct);

// Prepends KernelPreamble() unless `content` already starts with it.
std::string PrependPreamble(std::string_view content);

struct ConfigWrite {
  std::string target_file;
  std::string rendered_line;
};

// Renders the plan's factory requests in plan order.
std::vector<ConfigWrite> RunFactory(const ResolvedModel& model,
                                    const EmissionPlan& plan, Diagnostics& diags);

// Groups writes by target, in order of first appearance; lines appended in
// write order.
std::vector<GeneratedFile> ConfigFiles(const std::vector<ConfigWrite>& writes);

}  // namespace tecsrs

#endif  // TECSRS_EMIT_RTOS_H_
