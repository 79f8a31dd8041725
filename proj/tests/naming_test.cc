#include "tecsrs/naming.h"

#include <gtest/gtest.h>

#include <cctype>
#include <regex>
#include <set>
#include <stdexcept>

namespace tecsrs::naming {
namespace {

// Reference rule for UpperCamelCase, written independently of the library:
// split on underscores, capitalize the first letter of every piece.
std::string CamelOracle(const std::string& name) {
  std::string out;
  bool upper_next = true;
  for (char c : name) {
    if (c == '_') {
      upper_next = true;
      continue;
    }
    out.push_back(upper_next ? static_cast<char>(std::toupper(c)) : c);
    upper_next = false;
  }
  return out;
}

// Reference rule for snake_case on lowerCamel names: an underscore before
// every uppercase letter that follows a lowercase letter or digit.
std::string SnakeOracle(const std::string& name) {
  std::string s = std::regex_replace(name, std::regex("([a-z0-9])([A-Z])"), "$1_$2");
  for (auto& c : s) c = static_cast<char>(std::tolower(c));
  return s;
}

TEST(ContractName, Examples) {
  EXPECT_EQ(ContractName("sSensor"), "SSensor");
  EXPECT_EQ(ContractName("sPowerdown"), "SPowerdown");
  EXPECT_EQ(ContractName("sTask_body"), "STaskBody");
  EXPECT_EQ(ContractName("sTask_body"), CamelOracle("sTask_body"));
}

TEST(ContractName, EmptySuffixThrows) {
  EXPECT_THROW(ContractName("s"), std::invalid_argument);
  EXPECT_THROW(RecordName("t"), std::invalid_argument);
}

TEST(RecordName, Examples) {
  EXPECT_EQ(RecordName("tSensor"), "TSensor");
  EXPECT_EQ(RecordName("tPowerdown"), "TPowerdown");
  EXPECT_EQ(RecordName("tTask_rs"), "TTaskRs");
  EXPECT_EQ(RecordName("tTask_rs"), CamelOracle("tTask_rs"));
}

TEST(RecordName, NeverStartsWithDigit) {
  for (std::string name : {"tSensor", "t2x", "t_9", "tA_b_c"}) {
    const std::string r = RecordName(name);
    ASSERT_FALSE(r.empty());
    EXPECT_FALSE(std::isdigit(static_cast<unsigned char>(r[0]))) << name;
  }
}

TEST(FieldName, Examples) {
  EXPECT_EQ(SnakeCase("cPowerdown"), "c_powerdown");
  EXPECT_EQ(SnakeCase("port"), "port");
  EXPECT_EQ(SnakeCase("cTaskBody"), "c_task_body");
  EXPECT_EQ(SnakeCase("cTaskBody"), SnakeOracle("cTaskBody"));
}

TEST(FieldName, AgreesWithOracleOnCamelNames) {
  for (std::string name : {"eSensor", "ePowerdown2", "stackSize", "eiWakeUpNotificationHandler",
                           "taskRef", "cTaskBody", "a1b"}) {
    EXPECT_EQ(SnakeCase(name), SnakeOracle(name)) << name;
  }
}

TEST(FieldName, Idempotent) {
  for (std::string name : {"cPowerdown", "sSensor", "tTask_rs", "ePowerdown2", "x", "stackSize"}) {
    EXPECT_EQ(SnakeCase(SnakeCase(name)), SnakeCase(name)) << name;
    EXPECT_EQ(UpperCase(UpperCase(name)), UpperCase(name)) << name;
  }
}

TEST(EntryImplName, Examples) {
  EXPECT_EQ(EntryImplName("eSensor", "tSensor"), "ESensorForTSensor");
  EXPECT_EQ(EntryImplName("ePowerdown2", "tPowerdown"), "EPowerdown2ForTPowerdown");
  EXPECT_EQ(EntryImplName("eTask", "tTask_rs"),
            CamelOracle("eTask") + "For" + CamelOracle("tTask_rs"));
}

TEST(EntryImplName, InjectiveOnSampleCorpus) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"eSensor", "tSensor"}, {"ePowerdown2", "tPowerdown"}, {"eTask", "tTask_rs"},
      {"eiTask", "tTask_rs"}, {"eiActivateNotificationHandler", "tTask_rs"},
      {"eiWakeUpNotificationHandler", "tTask_rs"}, {"eTaskBody", "tTaskMain"},
  };
  std::set<std::string> seen;
  for (const auto& [port, ct] : pairs) EXPECT_TRUE(seen.insert(EntryImplName(port, ct)).second);
}

TEST(StaticNames, Examples) {
  const StaticNames sensor = StaticNamesFor("Sensor", {"eSensor"});
  EXPECT_EQ(sensor.instance, "SENSOR");
  EXPECT_EQ(sensor.var_instance, "SENSORVAR");
  EXPECT_EQ(sensor.entry_instances, std::vector<std::string>{"ESENSORFORSENSOR"});

  const StaticNames x = StaticNamesFor("X", {});
  EXPECT_EQ(x.instance, "X");
  EXPECT_EQ(x.var_instance, "XVAR");
  EXPECT_TRUE(x.entry_instances.empty());

  const StaticNames pd = StaticNamesFor("Powerdown", {"ePowerdown2"});
  EXPECT_EQ(pd.instance, "POWERDOWN");
  EXPECT_EQ(pd.entry_instances, std::vector<std::string>{"EPOWERDOWN2FORPOWERDOWN"});
}

TEST(StaticNames, UnderscoresKept) {
  EXPECT_EQ(StaticNamesFor("Sensor_2", {}).instance, "SENSOR_2");
  EXPECT_EQ(EntryInstanceName("eSensor", "Sensor_2"), "ESENSORFORSENSOR_2");
}

TEST(FileName, Examples) {
  EXPECT_EQ(FileName(FileKind::kContract, "sSensor"), "s_sensor.rs");
  EXPECT_EQ(FileName(FileKind::kDefinition, "tSensor"), "t_sensor.rs");
  EXPECT_EQ(FileName(FileKind::kSkeleton, "tSensor"), "t_sensor_impl.rs");
  EXPECT_EQ(FileName(FileKind::kDefinition, "tTask_rs"), "t_task_rs.rs");
  EXPECT_EQ(ModuleName("sPowerdown"), "s_powerdown");
}

TEST(MapParamType, Examples) {
  EXPECT_EQ(MapParamType({ParamSpecifier::kIn, "int32_t", 0, "bv1", {}}), "&i32");
  EXPECT_EQ(MapParamType({ParamSpecifier::kOut, "int32_t", 1, "distance", {}}), "&mut i32");
  EXPECT_EQ(MapParamType({ParamSpecifier::kIn, "pbio_port_id_t", 0, "p", {}}),
            "&pbio_port_id_t");
}

TEST(MapBaseType, Table) {
  const std::vector<std::pair<std::string, std::string>> table = {
      {"int8_t", "i8"},   {"int16_t", "i16"},  {"int32_t", "i32"},  {"int64_t", "i64"},
      {"uint8_t", "u8"},  {"uint16_t", "u16"}, {"uint32_t", "u32"}, {"uint64_t", "u64"},
      {"float", "f32"},   {"double", "f64"},   {"void", "()"},      {"ER", "ER"},
      {"pbio_port_id_t", "pbio_port_id_t"},
  };
  for (const auto& [c, rust] : table) EXPECT_EQ(MapBaseType(c), rust) << c;
}

TEST(ReturnSuffix, VoidIsEmpty) {
  EXPECT_EQ(ReturnSuffix("void"), "");
  EXPECT_EQ(ReturnSuffix("int32_t"), " -> i32");
  EXPECT_EQ(ReturnSuffix("ER"), " -> ER");
}

TEST(DemangleVarType, Examples) {
  EXPECT_EQ(DemangleVarType("Option_Ref_a_mut__pup_device_t__"),
            "Option<&'a mut pup_device_t>");
  EXPECT_EQ(DemangleVarType("i32"), "i32");
  EXPECT_EQ(DemangleVarType("Option_Ref_a_mut__foo_t__"), "Option<&'a mut foo_t>");
  EXPECT_EQ(DemangleVarType("Ref_a_mut__foo_t__"), "&'a mut foo_t");
}

TEST(DemangleVarType, ResidueRejected) {
  EXPECT_FALSE(DemangleVarType("Option_Ref_a_mut__foo_t__junk").has_value());
  EXPECT_FALSE(DemangleVarType("Option_Ref_b__foo_t__").has_value());
  EXPECT_FALSE(DemangleVarType("Option_").has_value());
}

}  // namespace
}  // namespace tecsrs::naming
