#include "tecsrs/header_const.h"

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "test_files.h"

namespace tecsrs {
namespace {

// Independent reading of the conversion rule: a `#define NAME INTEGER` line
// becomes one constant; every other line contributes nothing.
std::string Oracle(const std::string& header) {
  static const std::regex kDefine(
      R"(^\s*#define\s+([A-Za-z_][A-Za-z0-9_]*)\s+(0[xX][0-9A-Fa-f]+|[0-9]+)\s*$)");
  std::istringstream in(header);
  std::string line;
  std::string out;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, kDefine)) {
      out += "pub const " + m[1].str() + ": i32 = " + m[2].str() + ";\n";
    }
  }
  return out;
}

TEST(ConvertDefines, KernelHeaderGolden) {
  const ConstantsResult r = ConvertDefines(testing::TestData("golden/kernel_cfg.h"), "kernel_cfg.h");
  EXPECT_EQ(r.text, testing::TestData("golden/kernel_cfg.rs"));
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_NE(r.text.find("ISRID_tISR_SIOPortTarget1_ISRInstance"), std::string::npos);
}

TEST(ConvertDefines, EmptyInput) {
  const ConstantsResult r = ConvertDefines("");
  EXPECT_EQ(r.text, "");
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(ConvertDefines, ParenthesizedValueSkipped) {
  const ConstantsResult r = ConvertDefines("#define STACK_SIZE (4096)\n", "k.h");
  EXPECT_EQ(r.text, "");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, Severity::kWarning);
  EXPECT_EQ(r.diagnostics[0].code, "non-literal-define");
  EXPECT_EQ(r.diagnostics[0].location.line, 1);
}

TEST(ConvertDefines, MixedHeader) {
  const std::string header =
      "/* generated */\n"
      "#include <kernel.h>\n"
      "#define A 1\n"
      "  #define HEX_B\t0x1F  \n"
      "#define F(x) (x)\n"
      "#define EMPTY\n"
      "#define STR \"s\"\n"
      "#define C 42\n"
      "int x;\n";
  const ConstantsResult r = ConvertDefines(header, "m.h");
  EXPECT_EQ(r.text, "pub const A: i32 = 1;\npub const HEX_B: i32 = 0x1F;\npub const C: i32 = 42;\n");
  EXPECT_EQ(r.text, Oracle(header));
  EXPECT_EQ(r.diagnostics.size(), 3u);
  for (const auto& d : r.diagnostics) EXPECT_EQ(d.severity, Severity::kWarning);
}

TEST(ConvertDefines, AgreesWithOracleOnGolden) {
  const std::string header = testing::TestData("golden/kernel_cfg.h");
  EXPECT_EQ(ConvertDefines(header).text, Oracle(header));
}

TEST(ConvertDefines, ConcatenationHomomorphism) {
  const std::string a = "#define X 1\n#define Y (2)\n";
  const std::string b = "#define Z 0x10\n";
  EXPECT_EQ(ConvertDefines(a + b).text, ConvertDefines(a).text + ConvertDefines(b).text);
}

}  // namespace
}  // namespace tecsrs
