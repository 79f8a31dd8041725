#ifndef TECSRS_HEADER_CONST_H_
#define TECSRS_HEADER_CONST_H_

// Turns `#define NAME <integer>` lines of a kernel configuration header into
// Rust constants. Nothing else in the header is interpreted.

#include <string>
#include <string_view>
#include <vector>

#include "tecsrs/model.h"

namespace tecsrs {

struct ConstantsResult {
  std::string text;  // one `pub const NAME: i32 = VALUE;` line per define
  std::vector<Diagnostic> diagnostics;  // warnings only
};

ConstantsResult ConvertDefines(std::string_view header_text,
                               std::string_view source_name = "");

}  // namespace tecsrs

#endif  // TECSRS_HEADER_CONST_H_
