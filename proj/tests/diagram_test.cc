#include "tecsrs/diagram.h"

#include <gtest/gtest.h>

#include "tecsrs/frontend.h"
#include "test_files.h"

namespace tecsrs {
namespace {

ResolvedModel Model(const std::string& text) {
  const ParseResult p = ParseUnit(text, "d.cdl");
  EXPECT_TRUE(p.unit);
  const ResolveResult r = Resolve(std::span<const CdlUnit>(&*p.unit, 1));
  EXPECT_TRUE(r.model);
  return *r.model;
}

int Count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(EmitDiagram, SensorSample) {
  const std::string dot = EmitDiagram(Model(testing::TestData("cdl/sensor_sample.cdl")));
  EXPECT_TRUE(dot.starts_with("digraph components {\n"));
  EXPECT_EQ(Count(dot, "[label=\"t"), 2);
  EXPECT_EQ(Count(dot, " -> "), 1);
  EXPECT_NE(dot.find("\"Sensor\" [label=\"tSensor\\nSensor\"];"), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"Sensor\" -> \"Powerdown\" [label=\"sPowerdown\""), std::string::npos) << dot;
}

TEST(EmitDiagram, EmptyModel) {
  const std::string dot = EmitDiagram(ResolvedModel{});
  EXPECT_EQ(Count(dot, "->"), 0);
  EXPECT_EQ(Count(dot, "label="), 0);
  EXPECT_TRUE(dot.ends_with("}\n"));
}

TEST(EmitDiagram, ChainIsStable) {
  const std::string text =
      "signature sA { void f(void); };\n"
      "celltype tEnd { entry sA eA; };\n"
      "celltype tMid { call sA cA; entry sA eA; };\n"
      "celltype tHead { call sA cA; };\n"
      "cell tHead H { cA = M.eA; };\n"
      "cell tMid M { cA = E.eA; };\n"
      "cell tEnd E { };\n";
  const std::string first = EmitDiagram(Model(text));
  EXPECT_EQ(first, EmitDiagram(Model(text)));
  EXPECT_EQ(Count(first, "[label=\"t"), 3);
  EXPECT_EQ(Count(first, " -> "), 2);
  EXPECT_LT(first.find("\"H\" [label"), first.find("\"M\" [label"));
  EXPECT_LT(first.find("\"M\" [label"), first.find("\"E\" [label"));
}

}  // namespace
}  // namespace tecsrs
