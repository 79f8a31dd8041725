#include "templates.h"

#include <stdexcept>

namespace tecsrs::templates {

std::string Fill(std::string_view tmpl, std::initializer_list<Hole> holes) {
  std::string out;
  out.reserve(tmpl.size() * 2);
  std::size_t i = 0;
  while (i < tmpl.size()) {
    // The innermost "{{" of a brace run opens the hole, so "{{{x}}}" renders
    // as "{" + x + "}".
    const bool opens = tmpl.compare(i, 2, "{{") == 0 &&
                       (i + 2 >= tmpl.size() || tmpl[i + 2] != '{');
    if (!opens) {
      out.push_back(tmpl[i++]);
      continue;
    }
    const std::size_t close = tmpl.find("}}", i + 2);
    if (close == std::string_view::npos) {
      throw std::logic_error("unterminated template hole");
    }
    const std::string_view name = tmpl.substr(i + 2, close - i - 2);
    bool found = false;
    for (const auto& [hole, value] : holes) {
      if (hole == name) {
        out += value;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("no value for template hole '" + std::string(name) + "'");
    }
    i = close + 2;
  }
  return out;
}

}  // namespace tecsrs::templates
