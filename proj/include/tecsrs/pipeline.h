#ifndef TECSRS_PIPELINE_H_
#define TECSRS_PIPELINE_H_

// Parse -> validate -> resolve -> plan -> emit, entirely in memory.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tecsrs/generated_file.h"
#include "tecsrs/linker.h"
#include "tecsrs/model.h"

namespace tecsrs {

struct SourceText {
  std::string name;
  std::string text;
};

struct PipelineOptions {
  std::optional<PluginKind> default_plugin;
};

struct PipelineResult {
  std::vector<GeneratedFile> files;  // empty whenever an error was reported
  std::optional<ResolvedModel> model;
  std::optional<EmissionPlan> plan;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !HasErrors(diagnostics); }
};

PipelineResult RunPipeline(std::span<const SourceText> sources,
                           const PipelineOptions& options = {});

struct WriteOutcome {
  std::vector<std::string> written;
  std::vector<std::string> kept;  // SkipIfExists files already on disk
};

// Writes `files` under `out_dir`, honoring each file's policy.
// Throws std::filesystem::filesystem_error or std::runtime_error on I/O
// failure.
WriteOutcome WriteFiles(std::span<const GeneratedFile> files,
                        const std::filesystem::path& out_dir);

}  // namespace tecsrs

#endif  // TECSRS_PIPELINE_H_
