#ifndef TECSRS_CLI_H_
#define TECSRS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tecsrs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the command-line tool. `args` excludes the program name.
//
//   tecsrs-gen [--plugin P] --out DIR [--diagram PATH] [--report] FILE.cdl...
//   tecsrs-gen bindgen-lite HEADER -o OUT
int RunTool(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tecsrs

#endif  // TECSRS_CLI_H_
