#include "tecsrs/emit_rtos.h"

#include <gtest/gtest.h>

#include <map>

#include "tecsrs/frontend.h"
#include "tecsrs/pipeline.h"
#include "test_files.h"

namespace tecsrs {
namespace {

using testing::TestData;

PipelineResult RunText(const std::string& text) {
  const SourceText source{"rtos.cdl", text};
  return RunPipeline(std::span<const SourceText>(&source, 1));
}

std::map<std::string, std::string> Contents(const PipelineResult& r) {
  std::map<std::string, std::string> out;
  for (const auto& f : r.files) out[f.path] = f.content;
  return out;
}

const std::string kSecondTask =
    "cell tTask_rs Task2 {\n"
    "  cTaskBody = TaskMain.eTaskBody;\n"
    "  id = 2;\n"
    "  priority = HIGH_PRIORITY;\n"
    "  stackSize = 2048;\n"
    "};\n";

TEST(SubstituteMacros, Examples) {
  MacroEnv env;
  env.ct = "tTask_rs";
  env.cell = "Task1";
  env.attr_values = {{"id", "1"}};
  EXPECT_EQ(SubstituteMacros("TSKID_$id$", env).text, "TSKID_1");
  EXPECT_EQ(SubstituteMacros("$ct$_factory.h", env).text, "tTask_rs_factory.h");
  EXPECT_EQ(SubstituteMacros("no holes", env).text, "no holes");
  EXPECT_EQ(SubstituteMacros("$cell$:$ct$", env).text, "Task1:tTask_rs");
  EXPECT_TRUE(SubstituteMacros("no holes", MacroEnv{}).ok());
}

TEST(SubstituteMacros, UnknownHoleReported) {
  MacroEnv env;
  env.ct = "tA";
  const Substitution s = SubstituteMacros("X_$nope$_$ct$", env);
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(*s.unresolved, "nope");
  MacroEnv celltype_only;
  EXPECT_FALSE(SubstituteMacros("$cell$", celltype_only).ok());
}

TEST(SubstituteMacros, SinglePass) {
  MacroEnv env;
  env.attr_values = {{"a", "$b$"}, {"b", "B"}};
  const Substitution s = SubstituteMacros("[$a$]", env);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.text, "[$b$]");
}

TEST(Preamble, TaskDefinitionStartsWithIt) {
  const auto files = Contents(RunText(TestData("cdl/kernel_rs.cdl")));
  const std::string preamble = TestData("golden/itron_preamble.rs");
  EXPECT_EQ(KernelPreamble(), preamble);
  ASSERT_TRUE(files.count("t_task_rs.rs"));
  EXPECT_TRUE(files.at("t_task_rs.rs").starts_with(preamble));
}

TEST(Preamble, FileWithoutKernelTypesUnchanged) {
  const auto files = Contents(RunText(TestData("cdl/kernel_rs.cdl")));
  EXPECT_FALSE(files.at("t_task_main.rs").starts_with("use crate::kernel_cfg::*;"));
  for (const auto& [path, content] : files) {
    if (path != "t_task_rs.rs") EXPECT_EQ(content.find("itron"), std::string::npos) << path;
  }
}

TEST(Preamble, PrependedOncePerFile) {
  std::string text = TestData("cdl/kernel_rs.cdl");
  text += "[generate(ItronrsGenPlugin, \"lib\")] celltype tAlarm { attr { ID alarm_id = 5; }; };\n"
          "cell tAlarm Alarm { };\n";
  const auto files = Contents(RunText(text));
  const std::string preamble(KernelPreamble());
  for (std::string path : {"t_task_rs.rs", "t_alarm.rs"}) {
    ASSERT_TRUE(files.count(path)) << path;
    EXPECT_TRUE(files.at(path).starts_with(preamble)) << path;
    EXPECT_EQ(files.at(path).find(preamble, 1), std::string::npos) << path;
  }
  EXPECT_EQ(PrependPreamble(PrependPreamble("x\n")), preamble + "x\n");
}

TEST(Preamble, RustGenNeverGetsIt) {
  std::string text = TestData("cdl/kernel_rs.cdl");
  for (std::size_t pos; (pos = text.find("ItronrsGenPlugin")) != std::string::npos;) {
    text.replace(pos, 16, "RustGenPlugin");
  }
  const PipelineResult r = RunText(text);
  ASSERT_TRUE(r.ok());
  const auto files = Contents(r);
  EXPECT_FALSE(files.at("t_task_rs.rs").starts_with("use crate::kernel_cfg::*;"));
  EXPECT_FALSE(files.count("tecsgen.cfg"));
}

TEST(RunFactory, TaskLine) {
  const PipelineResult r = RunText(TestData("cdl/kernel_rs.cdl"));
  ASSERT_TRUE(r.ok()) << r.diagnostics.at(0).Format();
  const auto files = Contents(r);
  ASSERT_TRUE(files.count("tecsgen.cfg"));
  const std::string& cfg = files.at("tecsgen.cfg");
  EXPECT_NE(cfg.find("\nCRE_TSK(TSKID_1,"), std::string::npos);
  // The rendered line matches the static API statement of the sample config.
  const std::string sample = TestData("golden/config_example.cfg");
  const std::size_t at = sample.find("CRE_TSK");
  const std::string expected_line = sample.substr(at, sample.find('\n', at) - at);
  EXPECT_NE(cfg.find(expected_line + "\n"), std::string::npos) << cfg;
  EXPECT_EQ(files.at("tTask_rs_factory.h"), "#include \"kernel_cfg.h\"\n");
}

TEST(RunFactory, NoFactoryBlocksNoWrites) {
  const PipelineResult r = RunText(TestData("cdl/sensor_sample.cdl"));
  ASSERT_TRUE(r.model && r.plan);
  Diagnostics diags;
  EXPECT_TRUE(RunFactory(*r.model, *r.plan, diags).empty());
}

TEST(RunFactory, TwoTasksInDeclarationOrder) {
  const PipelineResult r = RunText(TestData("cdl/kernel_rs.cdl") + kSecondTask);
  ASSERT_TRUE(r.ok()) << r.diagnostics.at(0).Format();
  Diagnostics diags;
  const auto writes = RunFactory(*r.model, *r.plan, diags);
  std::vector<std::string> expected = {
      "#include \"tTask_rs_tecsgen.h\"",
      "#include \"kernel_cfg.h\"",
      "CRE_TSK(TSKID_1, { TA_ACT, 0, task_rs, MID_PRIORITY, STACK_SIZE, NULL });",
      "CRE_TSK(TSKID_2, { TA_NULL, 0, task_rs, HIGH_PRIORITY, 2048, NULL });",
  };
  ASSERT_EQ(writes.size(), expected.size());
  for (std::size_t i = 0; i < writes.size(); ++i) {
    EXPECT_EQ(writes[i].rendered_line, expected[i]);
    EXPECT_EQ(writes[i].rendered_line.find('$'), std::string::npos);
  }
  const auto files = ConfigFiles(writes);
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].path, "tecsgen.cfg");
  EXPECT_EQ(files[0].content, expected[0] + "\n" + expected[2] + "\n" + expected[3] + "\n");
  EXPECT_EQ(files[1].path, "tTask_rs_factory.h");
  EXPECT_EQ(files[0].role, FileRole::kConfig);
}

TEST(RunFactory, WriteCountLaw) {
  for (int extra = 0; extra < 4; ++extra) {
    std::string text = TestData("cdl/kernel_rs.cdl");
    for (int i = 0; i < extra; ++i) {
      text += "cell tTask_rs T" + std::to_string(i) +
              " { cTaskBody = TaskMain.eTaskBody; id = " + std::to_string(10 + i) +
              "; priority = 1; stackSize = 1; };\n";
    }
    const PipelineResult r = RunText(text);
    ASSERT_TRUE(r.ok());
    Diagnostics diags;
    const auto writes = RunFactory(*r.model, *r.plan, diags);
    const std::size_t cells = 1 + static_cast<std::size_t>(extra);
    EXPECT_EQ(writes.size(), 2 + cells * 1);
  }
}

TEST(RunFactory, UnresolvedMacro) {
  std::string text = TestData("cdl/kernel_rs.cdl");
  const std::string hole = "$stackSize$";
  text.replace(text.find(hole), hole.size(), "$stack$");
  const PipelineResult r = RunText(text);
  EXPECT_TRUE(r.files.empty());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "unresolved-macro");
  EXPECT_NE(r.diagnostics[0].message.find("$stack$"), std::string::npos);
  EXPECT_GT(r.diagnostics[0].location.line, 0);
}

TEST(MacroEnv, OmittedAttributesParticipate) {
  const PipelineResult r = RunText(TestData("cdl/kernel_rs.cdl"));
  ASSERT_TRUE(r.model);
  const MacroEnv env = MacroEnvForCell(*r.model, r.model->cell_index.at("Task1"));
  EXPECT_EQ(env.ct, "tTask_rs");
  EXPECT_EQ(env.cell, "Task1");
  EXPECT_EQ(env.attr_values.at("id"), "1");
  EXPECT_EQ(env.attr_values.at("attribute"), "TA_ACT");
  EXPECT_EQ(env.attr_values.at("stackSize"), "STACK_SIZE");
}

TEST(TaskIdCoherence, ConfigAndTaskRefAgree) {
  const PipelineResult r = RunText(TestData("cdl/kernel_rs.cdl") + kSecondTask);
  ASSERT_TRUE(r.ok());
  const auto files = Contents(r);
  const std::string& cfg = files.at("tecsgen.cfg");
  const std::string& def = files.at("t_task_rs.rs");
  for (std::string id : {"TSKID_1", "TSKID_2"}) {
    EXPECT_NE(cfg.find("CRE_TSK(" + id + ","), std::string::npos) << id;
    EXPECT_NE(def.find("NonZeroI32::new(" + id + ")"), std::string::npos) << id;
  }
}

TEST(ReferencesKernelTypes, OnlyNonOmittedAttrsAndVars) {
  CelltypeDef ct;
  ct.attrs.push_back({"id", "ID", std::nullopt, true, {}});
  EXPECT_FALSE(ReferencesKernelTypes(ct));
  ct.vars.push_back({"state", "STAT", std::nullopt, {}});
  EXPECT_TRUE(ReferencesKernelTypes(ct));
  CelltypeDef ref;
  ref.attrs.push_back({"task_ref", "TaskRef", std::nullopt, false, {}});
  EXPECT_TRUE(ReferencesKernelTypes(ref));
  CelltypeDef plain;
  plain.attrs.push_back({"ident", "IDENT_T", std::nullopt, false, {}});
  EXPECT_FALSE(ReferencesKernelTypes(plain));
}

}  // namespace
}  // namespace tecsrs
