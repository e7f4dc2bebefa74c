#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "qcat/graded.hpp"
#include "qcat/sampling.hpp"

using namespace qcat;

using Dims = std::vector<std::size_t>;

TEST(Graded, KnownHilbertSeries) {
  EXPECT_EQ(hilbert(support::load<Rationals>("sym2"), 4), (Dims{1, 2, 3, 4, 5}));
  EXPECT_EQ(hilbert(support::load<Rationals>("sym3"), 5), (Dims{1, 3, 6, 10, 15, 21}));
  EXPECT_EQ(hilbert(support::load<Rationals>("ext3"), 5), (Dims{1, 3, 3, 1, 0, 0}));
  EXPECT_EQ(hilbert(support::load<Rationals>("free2"), 5), (Dims{1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(hilbert(support::load<Rationals>("embed3"), 4), (Dims{1, 3, 0, 0, 0}));
  EXPECT_EQ(hilbert(support::load<Rationals>("unit_black"), 3), (Dims{1, 1, 0, 0}));
  EXPECT_EQ(hilbert(support::load<PrimeField>("gf2_nonkoszul"), 6),
            (Dims{1, 3, 7, 16, 38, 89, 209}));
}

TEST(Graded, CorpusHilbertMatchesOracle) {
  for (const auto& e : support::corpus())
    std::visit(
        [&](const auto& a) {
          const std::size_t top = a.gens() <= 2 ? 6 : 5;
          auto h = hilbert(a, top);
          auto basis = a.relations().basis();
          for (std::size_t m = 0; m <= top; ++m)
            EXPECT_EQ(h[m], oracle::graded_dim(a.field(), a.gens(), basis, m))
                << e.file << " degree " << m;
        },
        e.algebra);
}

TEST(Graded, RelationSpaceDimension) {
  auto sym2 = support::load<Rationals>("sym2");
  // I_3 = R (x) V + V (x) R has dimension 4 inside V^3 of dimension 8
  EXPECT_EQ(relation_space_in_degree(sym2, 3).dim(), 4u);
  EXPECT_EQ(relation_space_in_degree(sym2, 2), sym2.relations());
}

TEST(Graded, ReducedWordsRespectRelations) {
  auto sym2 = support::load<Rationals>("sym2");
  GradedAlgebra<Rationals> g(sym2);
  std::vector<std::size_t> xy{0, 1}, yx{1, 0}, xyx{0, 1, 0}, xxy{0, 0, 1};
  EXPECT_EQ(g.reduce_word(xy), g.reduce_word(yx));
  EXPECT_EQ(g.reduce_word(xyx), g.reduce_word(xxy));
  auto ext2 = support::load<Rationals>("ext2");
  GradedAlgebra<Rationals> e(ext2);
  auto a = e.reduce_word(xy), b = e.reduce_word(yx);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], -b[i]);
}

TEST(GradedProperty, RandomHilbertMatchesOracle) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    Rng rng(p * 1000);
    for (int t = 0; t < 25; ++t) {
      auto a = random_presentation(f, rng.index_between(1, 3), rng, "A");
      auto h = hilbert(a, 4);
      auto basis = a.relations().basis();
      for (std::size_t m = 0; m <= 4; ++m)
        EXPECT_EQ(h[m], oracle::graded_dim(f, a.gens(), basis, m));
    }
  }
  Rationals q;
  Rng rng(77);
  for (int t = 0; t < 15; ++t) {
    auto a = random_presentation(q, rng.index_between(1, 2), rng, "A");
    auto h = hilbert(a, 5);
    auto basis = a.relations().basis();
    for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(h[m], oracle::graded_dim(q, a.gens(), basis, m));
  }
}

// Multiplication is associative on reduced normal forms.
TEST(GradedProperty, ProductsAreAssociative) {
  PrimeField f(5);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto a = random_presentation(f, rng.index_between(2, 3), rng, "A");
    GradedAlgebra<PrimeField> g(a);
    for (int k = 0; k < 10; ++k) {
      std::vector<std::size_t> w;
      for (int i = 0; i < 4; ++i) w.push_back(rng.below(a.gens()));
      auto whole = g.reduce_word(w);
      std::vector<std::size_t> l(w.begin(), w.begin() + 2), r(w.begin() + 2, w.end());
      std::vector<std::size_t> l1(w.begin(), w.begin() + 1), r3(w.begin() + 1, w.end());
      auto lv = g.reduce_word(l), rv = g.reduce_word(r);
      auto l1v = g.reduce_word(l1), r3v = g.reduce_word(r3);
      auto acc = g.multiply(2, lv, 2, rv);
      EXPECT_EQ(g.multiply(1, l1v, 3, r3v), whole);
      EXPECT_EQ(acc, whole);
    }
  }
}
