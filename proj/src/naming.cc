#include "tecsrs/naming.h"

#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace tecsrs::naming {
namespace {

bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool IsLower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
char ToUpper(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}
char ToLower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool IsIdentifier(std::string_view text) {
  if (text.empty() || IsDigit(text.front())) return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string MarkedCamel(std::string_view name) {
  if (!HasSuffixAfterMarker(name)) {
    throw std::invalid_argument("name '" + std::string(name) +
                                "' has nothing after its marker character");
  }
  return UpperCamel(name);
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 11>
    kBaseTypes = {{
        {"int8_t", "i8"},
        {"int16_t", "i16"},
        {"int32_t", "i32"},
        {"int64_t", "i64"},
        {"uint8_t", "u8"},
        {"uint16_t", "u16"},
        {"uint32_t", "u32"},
        {"uint64_t", "u64"},
        {"float", "f32"},
        {"double", "f64"},
        {"void", "()"},
    }};

constexpr std::string_view kOptionPrefix = "Option_";
constexpr std::string_view kMutRefPrefix = "Ref_a_mut__";
constexpr std::string_view kRefCloser = "__";

}  // namespace

bool HasSuffixAfterMarker(std::string_view name) {
  if (name.size() < 2) return false;
  for (char c : name.substr(1)) {
    if (c != '_') return true;
  }
  return false;
}

std::string UpperCamel(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  bool capitalize = true;
  for (char c : name) {
    if (c == '_') {
      capitalize = true;
      continue;
    }
    out.push_back(capitalize ? ToUpper(c) : c);
    capitalize = false;
  }
  return out;
}

std::string ContractName(std::string_view signature_name) {
  return MarkedCamel(signature_name);
}

std::string RecordName(std::string_view celltype_name) {
  return MarkedCamel(celltype_name);
}

std::string SnakeCase(std::string_view name) {
  std::string out;
  out.reserve(name.size() + 4);
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (IsUpper(c)) {
      const bool after_word = i > 0 && (IsLower(name[i - 1]) || IsDigit(name[i - 1]));
      const bool acronym_end = i > 0 && IsUpper(name[i - 1]) &&
                               i + 1 < name.size() && IsLower(name[i + 1]);
      if ((after_word || acronym_end) && !out.empty() && out.back() != '_') {
        out.push_back('_');
      }
      out.push_back(ToLower(c));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string UpperCase(std::string_view name) {
  std::string out(name);
  for (char& c : out) c = ToUpper(c);
  return out;
}

std::string EntryImplName(std::string_view entry_port,
                          std::string_view celltype_name) {
  return UpperCamel(entry_port) + "For" + RecordName(celltype_name);
}

std::string VarRecordName(std::string_view celltype_name) {
  return RecordName(celltype_name) + "Var";
}

std::string EntryInstanceName(std::string_view entry_port,
                              std::string_view cell_name) {
  return UpperCase(entry_port) + "FOR" + UpperCase(cell_name);
}

StaticNames StaticNamesFor(std::string_view cell_name,
                           const std::vector<std::string>& entry_ports) {
  StaticNames names;
  names.instance = UpperCase(cell_name);
  names.var_instance = names.instance + "VAR";
  for (const auto& port : entry_ports) {
    names.entry_instances.push_back(EntryInstanceName(port, cell_name));
  }
  return names;
}

std::string ModuleName(std::string_view name) { return SnakeCase(name); }

std::string FileName(FileKind kind, std::string_view name) {
  switch (kind) {
    case FileKind::kContract:
    case FileKind::kDefinition:
      return SnakeCase(name) + ".rs";
    case FileKind::kSkeleton:
      return SnakeCase(name) + "_impl.rs";
  }
  return {};
}

std::string MapBaseType(std::string_view c_type) {
  for (const auto& [c_name, rust_name] : kBaseTypes) {
    if (c_name == c_type) return std::string(rust_name);
  }
  return std::string(c_type);
}

std::string MapParamType(const ParamDecl& param) {
  const std::string base = MapBaseType(param.c_type);
  if (param.specifier == ParamSpecifier::kOut) return "&mut " + base;
  return "&" + base;
}

std::string ReturnSuffix(std::string_view c_type) {
  if (c_type == "void") return {};
  return " -> " + MapBaseType(c_type);
}

std::optional<std::string> DemangleVarType(std::string_view mangled) {
  if (mangled.starts_with(kOptionPrefix)) {
    auto inner = DemangleVarType(mangled.substr(kOptionPrefix.size()));
    if (!inner) return std::nullopt;
    return "Option<" + *inner + ">";
  }
  if (mangled.starts_with(kMutRefPrefix)) {
    std::string_view rest = mangled.substr(kMutRefPrefix.size());
    if (!rest.ends_with(kRefCloser) || rest.size() == kRefCloser.size()) {
      return std::nullopt;
    }
    auto inner = DemangleVarType(rest.substr(0, rest.size() - kRefCloser.size()));
    if (!inner) return std::nullopt;
    return "&'a mut " + *inner;
  }
  if (mangled.starts_with("Ref_")) return std::nullopt;
  if (!IsIdentifier(mangled) || mangled.find("__") != std::string_view::npos) {
    return std::nullopt;
  }
  return MapBaseType(mangled);
}

}  // namespace tecsrs::naming
