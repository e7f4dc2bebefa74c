#include <gtest/gtest.h>

#include "support.hpp"
#include "qcat/io.hpp"
#include "qcat/koszul.hpp"
#include "qcat/sampling.hpp"

using namespace qcat;

namespace {

struct Failure {
  std::size_t line, column;
  std::string kind;
};

Failure parse_failure(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.kind()};
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {};
}

}  // namespace

TEST(Io, ParsesSym2) {
  auto a = std::get<Presentation<Rationals>>(parse("field Q\nalgebra Sym2\ngens x y\nrel x*y - y*x\n"));
  EXPECT_EQ(a.name(), "Sym2");
  EXPECT_EQ(a.relations().dim(), 1u);
  EXPECT_EQ(unparse(a), "field Q\nalgebra Sym2\ngens x y\nrel x*y - y*x\n");
}

TEST(Io, NoRelationsIsTheWhiteUnit) {
  auto a = std::get<Presentation<PrimeField>>(parse("field GF 5\nalgebra Free1\ngens t\n"));
  EXPECT_TRUE(a.same_algebra(unit_white(PrimeField(5))));
}

TEST(Io, CoefficientsCommentsAndCanonicalForm) {
  auto a = parse("# header\r\nfield Q\r\nalgebra A  # trailing\ngens x y\nrel 2*x*x + 4*x*y\nrel 1/2*y*y - 3/4*y*x\n");
  EXPECT_EQ(unparse(a),
            "field Q\nalgebra A\ngens x y\nrel x*x + 2*x*y\nrel y*x - 2/3*y*y\n");
  auto b = parse("field GF 3\nalgebra B\ngens x y\nrel x*y + x*y + x*y + y*x\n");
  EXPECT_EQ(unparse(b), "field GF 3\nalgebra B\ngens x y\nrel y*x\n");
}

TEST(Io, Errors) {
  auto f = parse_failure("field Q\nalgebra A\ngens x y z\nrel x*y*z\n");
  EXPECT_EQ(f.kind, "non-quadratic");
  EXPECT_EQ(f.line, 4u);
  EXPECT_EQ(f.column, 9u);

  f = parse_failure("field Q\nalgebra A\ngens x y\nrel x*w\n");
  EXPECT_EQ(f.kind, "unknown-generator");
  EXPECT_EQ(f.column, 7u);

  f = parse_failure("field GF 6\nalgebra A\ngens x\n");
  EXPECT_EQ(f.kind, "non-prime-modulus");
  EXPECT_EQ(f.line, 1u);
  EXPECT_EQ(f.column, 10u);

  f = parse_failure("field Q\nalgebra A\ngens\n");
  EXPECT_EQ(f.kind, "empty-generators");

  f = parse_failure("field Q\nalgebra A\ngens x\ngens y\n");
  EXPECT_EQ(f.kind, "duplicate");
  EXPECT_EQ(f.line, 4u);

  f = parse_failure("field Q\nalgebra A\ngens x x\n");
  EXPECT_EQ(f.kind, "duplicate");

  f = parse_failure("algebra A\ngens x\n");
  EXPECT_EQ(f.kind, "missing");

  f = parse_failure("field Q\nalgebra A\ngens x\nrel x*x x*x\n");
  EXPECT_EQ(f.kind, "syntax");

  f = parse_failure("field GF 5\nalgebra A\ngens x\nrel 1/5*x*x\n");
  EXPECT_EQ(f.kind, "coefficient");

  f = parse_failure("field Q\nalgebra A\ngens x\nrel 1/0*x*x\n");
  EXPECT_EQ(f.kind, "syntax");

  f = parse_failure("field Q\nalgebra A\ngens x\nbogus\n");
  EXPECT_EQ(f.kind, "syntax");
}

TEST(Io, CorpusIsCanonicalAndRoundTrips) {
  auto all = support::corpus();
  EXPECT_EQ(all.size(), 14u);
  for (const auto& e : all) {
    EXPECT_EQ(unparse(e.algebra), e.text) << e.file;
    EXPECT_EQ(unparse(parse(unparse(e.algebra))), e.text) << e.file;
    std::visit([&](const auto& a) { EXPECT_EQ(std::get<std::decay_t<decltype(a)>>(parse(unparse(a))), a); },
               e.algebra);
  }
}

TEST(Io, GF7FamilyIsTheSeededDraw) {
  auto fam = random_family(PrimeField(7), 4, 7005, "gf7_");
  for (const auto& a : fam) EXPECT_EQ(a, support::load<PrimeField>(a.name()));
}

TEST(Io, ProductLabelsRoundTrip) {
  auto sym2 = support::load<Rationals>("sym2");
  auto p = black(sym2, dual(sym2));
  EXPECT_EQ(std::get<Presentation<Rationals>>(parse(unparse(p))), p);
  auto w = white(dual(sym2), sym2);
  EXPECT_EQ(std::get<Presentation<Rationals>>(parse(unparse(w))), w);
}

TEST(IoProperty, RandomRoundTrips) {
  Rng rng(314);
  for (int t = 0; t < 100; ++t) {
    auto a = random_presentation(PrimeField(5), rng.index_between(1, 3), rng, "R" + std::to_string(t));
    EXPECT_EQ(std::get<Presentation<PrimeField>>(parse(unparse(a))), a);
    auto b = random_presentation(Rationals(), rng.index_between(1, 3), rng, "Q" + std::to_string(t));
    EXPECT_EQ(std::get<Presentation<Rationals>>(parse(unparse(b))), b);
  }
}
