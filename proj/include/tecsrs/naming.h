#ifndef TECSRS_NAMING_H_
#define TECSRS_NAMING_H_

// Identifier, type and file-name conventions for generated Rust sources.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecsrs/model.h"

namespace tecsrs::naming {

// sSensor -> SSensor, sTask_body -> STaskBody.
// Throws std::invalid_argument when nothing follows the leading marker.
std::string ContractName(std::string_view signature_name);

// tSensor -> TSensor, tTask_rs -> TTaskRs. Same rule as ContractName.
std::string RecordName(std::string_view celltype_name);

// UpperCamelCase without a marker requirement: ePowerdown2 -> EPowerdown2.
std::string UpperCamel(std::string_view name);

// cPowerdown -> c_powerdown, cTaskBody -> c_task_body.
std::string SnakeCase(std::string_view name);

// SENSOR, SENSOR_2. Underscores are kept.
std::string UpperCase(std::string_view name);

// (eSensor, tSensor) -> ESensorForTSensor
std::string EntryImplName(std::string_view entry_port,
                          std::string_view celltype_name);

// Name of the variable record: TSensorVar.
std::string VarRecordName(std::string_view celltype_name);

struct StaticNames {
  std::string instance;
  std::string var_instance;
  std::vector<std::string> entry_instances;
};

StaticNames StaticNamesFor(std::string_view cell_name,
                           const std::vector<std::string>& entry_ports);

// Static that implements `entry_port` on `cell_name`: ESENSORFORSENSOR.
std::string EntryInstanceName(std::string_view entry_port,
                              std::string_view cell_name);

enum class FileKind { kContract, kDefinition, kSkeleton };

// (contract, sSensor) -> s_sensor.rs; (skeleton, tSensor) -> t_sensor_impl.rs
std::string FileName(FileKind kind, std::string_view name);

// Module path used in `use crate::{...}` lines: s_sensor.
std::string ModuleName(std::string_view name);

// Fixed C-to-Rust base type table. Unknown names pass through verbatim.
std::string MapBaseType(std::string_view c_type);

// [in] T -> &T', [out] T* -> &mut T'. Requires a model-valid parameter.
std::string MapParamType(const ParamDecl& param);

// Return type suffix for a method: "" for void, " -> i32" otherwise.
std::string ReturnSuffix(std::string_view c_type);

// Option_Ref_a_mut__pup_device_t__ -> Option<&'a mut pup_device_t>.
// Returns nullopt when the text leaves unrecognized residue.
std::optional<std::string> DemangleVarType(std::string_view mangled);

// True for `s`/`t` style names with at least one character after the marker.
bool HasSuffixAfterMarker(std::string_view name);

}  // namespace tecsrs::naming

#endif  // TECSRS_NAMING_H_
