#include "tecsrs/pipeline.h"

#include <fstream>
#include <set>
#include <stdexcept>

#include "tecsrs/emit_core.h"
#include "tecsrs/emit_rtos.h"
#include "tecsrs/frontend.h"

namespace tecsrs {

PipelineResult RunPipeline(std::span<const SourceText> sources,
                           const PipelineOptions& options) {
  PipelineResult result;
  Diagnostics diags;

  std::vector<CdlUnit> units;
  for (const auto& source : sources) {
    ParseResult parsed = ParseUnit(source.text, source.name);
    diags.Append(parsed.diagnostics);
    if (!parsed.unit) continue;
    diags.Append(ValidateUnit(*parsed.unit));
    units.push_back(std::move(*parsed.unit));
  }
  if (diags.has_errors()) {
    result.diagnostics = diags.all();
    return result;
  }

  ResolveResult resolved = Resolve(units, {options.default_plugin});
  diags.Append(resolved.diagnostics);
  if (!resolved.model) {
    result.diagnostics = diags.all();
    return result;
  }
  const ResolvedModel& model = *resolved.model;

  EmissionPlan plan = PlanEmission(model, diags);
  std::vector<GeneratedFile> files;
  for (const auto& planned : plan.contract_files) {
    files.push_back(EmitContract(model.signatures[planned.index]));
  }
  for (const auto& planned : plan.definition_files) {
    if (auto file = EmitDefinition(model, planned.index, diags)) {
      files.push_back(std::move(*file));
    }
  }
  for (const auto& planned : plan.skeleton_files) {
    files.push_back(EmitSkeleton(model, planned.index));
  }
  std::set<std::string> source_paths;
  for (const auto& f : files) source_paths.insert(f.path);
  for (auto& config : ConfigFiles(RunFactory(model, plan, diags))) {
    if (source_paths.count(config.path)) {
      diags.Error("file-name-collision",
                  "factory write target '" + config.path +
                      "' collides with a generated source file",
                  {});
      continue;
    }
    files.push_back(std::move(config));
  }

  result.model = std::move(resolved.model);
  result.plan = std::move(plan);
  result.diagnostics = diags.all();
  if (!diags.has_errors()) result.files = std::move(files);
  return result;
}

WriteOutcome WriteFiles(std::span<const GeneratedFile> files,
                        const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  WriteOutcome outcome;
  fs::create_directories(out_dir);
  for (const auto& file : files) {
    const fs::path target = out_dir / file.path;
    if (file.policy == WritePolicy::kSkipIfExists && fs::exists(target)) {
      outcome.kept.push_back(file.path);
      continue;
    }
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::ofstream stream(target, std::ios::binary | std::ios::trunc);
    stream << file.content;
    if (!stream) throw std::runtime_error("cannot write " + target.string());
    outcome.written.push_back(file.path);
  }
  return outcome;
}

}  // namespace tecsrs
