#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "qcat/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = qcat::run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& stem) { return "corpus/" + stem + ".qa"; }

}  // namespace

TEST(Cli, HilbertSym2) {
  auto r = run({"hilbert", "--max", "4", corpus("sym2")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0: 1\n1: 2\n2: 3\n3: 4\n4: 5\n");
}

TEST(Cli, DualThroughStdinRoundTrips) {
  auto once = run({"dual", corpus("sym2")});
  ASSERT_EQ(once.code, 0);
  auto twice = run({"dual", "-"}, once.out);
  ASSERT_EQ(twice.code, 0);
  EXPECT_EQ(twice.out, support::read_file(support::source_dir() / "corpus/sym2.qa"));
}

TEST(Cli, KoszulVerdictLines) {
  auto r = run({"koszul", "--max", "6", corpus("ext2")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("koszul_up_to_6: true\n"), std::string::npos);
  auto g = run({"koszul", "--max", "6", corpus("gf2_nonkoszul")});
  EXPECT_EQ(g.code, 0);  // a negative verdict is a result, not an error
  EXPECT_NE(g.out.find("koszul_up_to_6: false\n"), std::string::npos);
  EXPECT_NE(g.out.find("euler_hilbert_up_to_6: false\n"), std::string::npos);
}

TEST(Cli, StructuredRecords) {
  auto r = run({"--format", "structured", "hilbert", "--max", "2", corpus("sym2")});
  EXPECT_EQ(r.out, "hilbert degree=0 dim=1\nhilbert degree=1 dim=2\nhilbert degree=2 dim=3\n");
  auto e = run({"--format", "structured", "ext", "--max", "2", corpus("ext2")});
  EXPECT_NE(e.out.find("verdict up_to=2 ext_diagonal=true koszul=true agree=true\n"),
            std::string::npos);
}

TEST(Cli, ParseErrorHasPosition) {
  auto r = run({"dual", "-"}, "field Q\nalgebra A\ngens x y z\nrel x*y*z\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("-:4:9:"), std::string::npos) << r.err;
  auto s = run({"--format", "structured", "dual", "-"}, "field GF 4\nalgebra A\ngens x\n");
  EXPECT_EQ(s.code, 2);
  EXPECT_EQ(s.out.rfind("error kind=parse:non-prime-modulus file=- line=1 column=10 ", 0), 0u) << s.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"product", corpus("sym2")}).code, 2);
  EXPECT_EQ(run({"product", "--kind", "grey", corpus("sym2"), corpus("ext2")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LawsAreDeterministicAndPass) {
  std::vector<std::string> args{"laws", "--suite", "all", "--trials", "4", "--seed", "123"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("summary: "), std::string::npos);
  EXPECT_EQ(a.out.find("FAIL "), std::string::npos);
  auto c = run({"laws", "--suite", "all", "--trials", "4", "--seed", "124"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, LawsOnMixedFieldsIsAnError) {
  auto r = run({"laws", corpus("sym2"), corpus("gf7_2")});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, QuoteValue) {
  using qcat::cli::quote_value;
  EXPECT_EQ(quote_value("abc"), "abc");
  EXPECT_EQ(quote_value(""), "\"\"");
  EXPECT_EQ(quote_value("a b"), "\"a b\"");
  EXPECT_EQ(quote_value("a=\"b\"\\"), "\"a=\\\"b\\\"\\\\\"");
  EXPECT_EQ(quote_value("x\ny"), "\"x\\ny\"");
}
