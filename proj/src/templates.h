#ifndef TECSRS_SRC_TEMPLATES_H_
#define TECSRS_SRC_TEMPLATES_H_

// Output templates for the Rust emitters. Holes are written `{{name}}`.
// Indentation inside generated files is two spaces.

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

namespace tecsrs::templates {

using Hole = std::pair<std::string_view, std::string_view>;

// Fills every hole in `tmpl`. Throws std::logic_error for a hole with no
// value, which is always an emitter bug.
std::string Fill(std::string_view tmpl, std::initializer_list<Hole> holes);

// ---- contract (trait) file ----

inline constexpr std::string_view kTrait =
    "pub trait {{trait}} {\n"
    "{{methods}}"
    "}\n";

inline constexpr std::string_view kTraitMethod =
    "  fn {{name}}(&self{{params}}){{ret}};\n";

// ---- definition file ----

inline constexpr std::string_view kImportMutex = "use spin::Mutex;\n";
inline constexpr std::string_view kImportModules = "use crate::{{{modules}}};\n";

inline constexpr std::string_view kGenericRecord =
    "pub struct {{record}}<{{params}}>\n"
    "where\n"
    "{{bounds}}"
    "{\n"
    "{{fields}}"
    "}\n";

inline constexpr std::string_view kBound = "  {{param}}: {{trait}},\n";

inline constexpr std::string_view kRecord =
    "pub struct {{record}}{{generics}}{\n"
    "{{fields}}"
    "}\n";

inline constexpr std::string_view kField = "  pub {{name}}: {{type}},\n";

inline constexpr std::string_view kEntryRecord =
    "pub struct {{entry}}<'a>{\n"
    "  pub cell: &'a {{cell_type}},\n"
    "}\n";

inline constexpr std::string_view kInstance =
    "pub static {{instance}}: {{type}} = {{record}} {\n"
    "{{fields}}"
    "};\n";

inline constexpr std::string_view kVarInstance =
    "pub static {{instance}}: Mutex<{{record}}> = Mutex::new({{record}} {\n"
    "{{fields}}"
    "});\n";

inline constexpr std::string_view kEntryInstance =
    "pub static {{instance}}: {{entry}} = {{entry}} {\n"
    "  cell: &{{cell}},\n"
    "};\n";

inline constexpr std::string_view kInitField = "  {{name}}: {{value}},\n";

inline constexpr std::string_view kAccessor =
    "impl{{impl_generics}} {{record}}{{type_args}} {\n"
    "  #[inline]\n"
    "  pub fn get_cell_ref{{fn_generics}}(&self) -> {{tuple_type}} {\n"
    "    {{tuple_value}}\n"
    "  }\n"
    "}\n";

// ---- skeleton file ----

inline constexpr std::string_view kEntryImpl =
    "impl {{trait}} for {{entry}}<'_>{\n"
    "{{methods}}"
    "}\n";

inline constexpr std::string_view kEntryImplMethod =
    "  #[inline]\n"
    "  fn {{name}}(&self{{params}}){{ret}} {\n"
    "    let cell_ref = self.cell.get_cell_ref();\n"
    "  }\n";

}  // namespace tecsrs::templates

#endif  // TECSRS_SRC_TEMPLATES_H_
