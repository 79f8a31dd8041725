#include "tecsrs/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace tecsrs {
namespace {

std::string_view RoleName(FileRole role) {
  switch (role) {
    case FileRole::kContract:
      return "contract";
    case FileRole::kDefinition:
      return "definition";
    case FileRole::kSkeleton:
      return "skeleton";
    case FileRole::kConfig:
      return "config";
  }
  return {};
}

}  // namespace

int CountLines(std::string_view content) {
  return static_cast<int>(std::count(content.begin(), content.end(), '\n'));
}

GenerationReport BuildReport(std::span<const GeneratedFile> files) {
  GenerationReport report;
  for (const auto& file : files) {
    const int lines = CountLines(file.content);
    report.entries.push_back({file.path, file.role, lines});
    if (file.role == FileRole::kSkeleton) {
      report.skeleton_lines += lines;
    } else {
      report.auto_generated_lines += lines;
    }
  }
  return report;
}

std::string FormatReport(const GenerationReport& report) {
  std::size_t path_width = 24;
  for (const auto& e : report.entries) path_width = std::max(path_width, e.path.size() + 2);
  const std::size_t total_width = path_width + 12 + 8;

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(path_width)) << "file"
      << std::setw(12) << "kind" << std::right << std::setw(8) << "lines" << '\n';
  out << std::string(total_width, '-') << '\n';
  for (const auto& e : report.entries) {
    out << std::left << std::setw(static_cast<int>(path_width)) << e.path
        << std::setw(12) << RoleName(e.role) << std::right << std::setw(8) << e.lines
        << '\n';
  }
  out << std::string(total_width, '-') << '\n';
  out << std::left << std::setw(static_cast<int>(path_width + 12)) << "auto-generated"
      << std::right << std::setw(8) << report.auto_generated_lines << '\n';
  out << std::left << std::setw(static_cast<int>(path_width + 12)) << "skeleton stubs"
      << std::right << std::setw(8) << report.skeleton_lines << '\n';
  return out.str();
}

}  // namespace tecsrs
