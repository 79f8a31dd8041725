#ifndef TECSRS_EMIT_CORE_H_
#define TECSRS_EMIT_CORE_H_

// Rust source emission for signatures (traits), celltypes with their cells
// (records and statics), and entry-port implementation skeletons.

#include <cstddef>
#include <optional>

#include "tecsrs/generated_file.h"
#include "tecsrs/linker.h"
#include "tecsrs/model.h"

namespace tecsrs {

GeneratedFile EmitContract(const SignatureDef& sig);

// Definition and instantiation file for one celltype and all of its cells.
// Returns nullopt when an attribute or variable lacks a value or a macro
// hole cannot be resolved; the reasons are appended to `diags`.
std::optional<GeneratedFile> EmitDefinition(const ResolvedModel& model,
                                            std::size_t celltype,
                                            Diagnostics& diags);

// Entry-port implementation stubs. The developer owns this file after the
// first run, so it is written with WritePolicy::kSkipIfExists.
GeneratedFile EmitSkeleton(const ResolvedModel& model, std::size_t celltype);

}  // namespace tecsrs

#endif  // TECSRS_EMIT_CORE_H_
