#include "tecsrs/header_const.h"

#include <cctype>

namespace tecsrs {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsBareInteger(std::string_view text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    for (char c : text.substr(2)) {
      if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view TrimRight(std::string_view s) {
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ConstantsResult ConvertDefines(std::string_view header_text,
                               std::string_view source_name) {
  ConstantsResult result;
  int line_no = 0;
  std::size_t start = 0;
  while (start < header_text.size()) {
    std::size_t end = header_text.find('\n', start);
    if (end == std::string_view::npos) end = header_text.size();
    std::string_view line = header_text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && IsSpace(line[i])) ++i;
    if (line.substr(i, 7) != "#define") continue;
    const int column = static_cast<int>(i) + 1;
    i += 7;

    auto skip = [&] {
      Diagnostic d;
      d.severity = Severity::kWarning;
      d.code = "non-literal-define";
      d.message = "skipped #define that is not `NAME <integer>`: " +
                  std::string(TrimRight(line));
      d.location = {std::string(source_name), line_no, column};
      result.diagnostics.push_back(std::move(d));
    };

    if (i >= line.size() || !IsSpace(line[i])) {
      skip();
      continue;
    }
    while (i < line.size() && IsSpace(line[i])) ++i;
    const std::size_t name_begin = i;
    while (i < line.size() && IsIdentChar(line[i])) ++i;
    const std::string_view name = line.substr(name_begin, i - name_begin);
    // A function-like macro has '(' right after its name.
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])) ||
        i >= line.size() || !IsSpace(line[i])) {
      skip();
      continue;
    }
    const std::string_view value = TrimRight(line.substr(i));
    std::size_t v = 0;
    while (v < value.size() && IsSpace(value[v])) ++v;
    if (!IsBareInteger(value.substr(v))) {
      skip();
      continue;
    }
    result.text += "pub const ";
    result.text += name;
    result.text += ": i32 = ";
    result.text += value.substr(v);
    result.text += ";\n";
  }
  return result;
}

}  // namespace tecsrs
