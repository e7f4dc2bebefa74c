#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "qcat/cli.hpp"

namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCase> load_cases() {
  std::istringstream in(support::read_file(support::source_dir() / "tests/golden/cases.txt"));
  std::vector<GoldenCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    GoldenCase c{line.substr(0, tab), {}};
    std::istringstream words(line.substr(tab + 1));
    for (std::string w; words >> w;) c.args.push_back(w);
    out.push_back(std::move(c));
  }
  return out;
}

// Same layout as tools/regen_golden.sh.
std::string run_case(const GoldenCase& c) {
  std::ostringstream out, err;
  std::istringstream in;
  int code = qcat::run_cli(c.args, out, err, in);
  std::string s = out.str();
  if (!err.str().empty()) s += "--- stderr\n" + err.str();
  return s + "--- exit " + std::to_string(code) + "\n";
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesRecordedOutput) {
  const auto& c = GetParam();
  auto expected = support::read_file(support::source_dir() / "tests/golden" / (c.name + ".out"));
  ASSERT_FALSE(expected.empty()) << "missing golden file for " << c.name;
  EXPECT_EQ(run_case(c), expected);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(load_cases()),
                         [](const ::testing::TestParamInfo<GoldenCase>& info) {
                           std::string n = info.param.name;
                           for (char& ch : n)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return n;
                         });

}  // namespace
