#include "tecsrs/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tecsrs/diagram.h"
#include "tecsrs/header_const.h"
#include "tecsrs/pipeline.h"
#include "tecsrs/report.h"

namespace tecsrs {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void PrintDiagnostics(std::span<const Diagnostic> diagnostics, std::ostream& err) {
  for (const auto& d : diagnostics) err << d.Format() << '\n';
}

int RunBindgenLite(const std::string& header, const std::string& output,
                   std::ostream& out, std::ostream& err) {
  const ConstantsResult result = ConvertDefines(ReadFile(header), header);
  PrintDiagnostics(result.diagnostics, err);
  WriteText(output, result.text);
  out << "wrote " << output << '\n';
  return kExitOk;
}

}  // namespace

int RunTool(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Generate Rust sources and RTOS configuration from CDL files",
               "tecsrs-gen"};
  std::vector<std::string> inputs;
  std::string plugin_name;
  std::string out_dir;
  std::string diagram_path;
  bool print_report = false;
  app.add_option("--plugin", plugin_name,
                 "Plugin for celltypes and cells without a generate directive")
      ->check(CLI::IsMember({"RustGenPlugin", "ItronrsGenPlugin"}));
  app.add_option("--out", out_dir, "Output directory for generated files");
  app.add_option("--diagram", diagram_path, "Write a Graphviz component diagram");
  app.add_flag("--report", print_report, "Print the generated line-count table");
  app.add_option("inputs", inputs, "CDL input files");

  auto* bindgen = app.add_subcommand(
      "bindgen-lite", "Convert integer #defines of a kernel header to Rust constants");
  std::string header_path;
  std::string constants_path;
  bindgen->add_option("header", header_path, "Kernel configuration header")->required();
  bindgen->add_option("-o", constants_path, "Output Rust file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bindgen->parsed()) {
      return RunBindgenLite(header_path, constants_path, out, err);
    }
    if (inputs.empty()) {
      err << "error: no input files\n" << app.help();
      return kExitUsage;
    }
    if (out_dir.empty()) {
      err << "error: --out DIR is required\n";
      return kExitUsage;
    }

    std::vector<SourceText> sources;
    for (const auto& path : inputs) sources.push_back({path, ReadFile(path)});
    PipelineOptions options;
    if (!plugin_name.empty()) options.default_plugin = PluginFromName(plugin_name);

    const PipelineResult result = RunPipeline(sources, options);
    PrintDiagnostics(result.diagnostics, err);
    if (!result.ok()) return kExitDiagnostics;

    const WriteOutcome outcome = WriteFiles(result.files, out_dir);
    for (const auto& path : outcome.written) out << "wrote " << path << '\n';
    for (const auto& path : outcome.kept) out << "kept " << path << " (already exists)\n";
    if (!diagram_path.empty()) {
      WriteText(diagram_path, EmitDiagram(*result.model));
      out << "wrote " << diagram_path << '\n';
    }
    if (print_report) out << FormatReport(BuildReport(result.files));
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tecsrs
