#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "output.hpp"

using namespace mrey::cli;

TEST(Output, SeventeenDigits) {
  EXPECT_EQ(format_double(-0.28125), "-0.28125");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1e300), "1.0000000000000001e+300");
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(std::stod(format_double(M_PI)), M_PI);
}

TEST(Output, CsvLayout) {
  const DataTable t{{"n", "l", "E", "valid"}, {{std::int64_t{0}, std::int64_t{1}, 0.5, true},
                                                {std::int64_t{2}, std::int64_t{3}, -1.25, false}}};
  std::ostringstream ss;
  write_csv(t, ss);
  EXPECT_EQ(ss.str(), "n,l,E,valid\n0,1,0.5,true\n2,3,-1.25,false\n");
}

TEST(Output, JsonSameFieldsAndNullForNonFinite) {
  const DataTable t{{"beta", "lambda", "Z", "U", "S", "F", "C"},
                    {{1.0, 2.0, INFINITY, -0.5, 0.25, NAN, 0.0}}};
  std::ostringstream ss;
  write_json(t, ss);
  const std::string s = ss.str();
  for (const char* f : {"\"beta\"", "\"lambda\"", "\"Z\"", "\"U\"", "\"S\"", "\"F\"", "\"C\""}) {
    EXPECT_NE(s.find(f), std::string::npos) << f;
  }
  EXPECT_NE(s.find("\"Z\": null"), std::string::npos);
  EXPECT_NE(s.find("\"F\": null"), std::string::npos);
  EXPECT_LT(s.find("\"beta\""), s.find("\"C\""));
}

TEST(Output, FileWriteCreatesDirectoriesAndUsesLf) {
  const auto dir = std::filesystem::temp_directory_path() / "mrey_output_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  const DataTable t{{"a"}, {{1.0}, {2.0}}};
  write_output(t, OutputFormat::Csv, dir / "x.csv");
  std::ifstream in(dir / "x.csv", std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "a\n1\n2\n");
  std::filesystem::remove_all(dir.parent_path());
}

TEST(Output, UnwritablePathIsIoError) {
  const DataTable t{{"a"}, {{1.0}}};
  EXPECT_THROW(write_output(t, OutputFormat::Csv, "/proc/mrey/cannot/x.csv"), io_error);
}

TEST(Output, Extensions) {
  EXPECT_STREQ(extension(OutputFormat::Csv), ".csv");
  EXPECT_STREQ(extension(OutputFormat::Json), ".json");
}
