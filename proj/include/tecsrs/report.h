#ifndef TECSRS_REPORT_H_
#define TECSRS_REPORT_H_

// Line-count summary of a generation run: how much was produced
// automatically versus how much is left as stubs for the developer.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tecsrs/generated_file.h"

namespace tecsrs {

struct ReportEntry {
  std::string path;
  FileRole role = FileRole::kContract;
  int lines = 0;
};

struct GenerationReport {
  std::vector<ReportEntry> entries;
  int auto_generated_lines = 0;  // contracts, definitions, config files
  int skeleton_lines = 0;        // impl skeletons
};

int CountLines(std::string_view content);

GenerationReport BuildReport(std::span<const GeneratedFile> files);

// Fixed-width table, one row per file followed by the two totals.
std::string FormatReport(const GenerationReport& report);

}  // namespace tecsrs

#endif  // TECSRS_REPORT_H_
