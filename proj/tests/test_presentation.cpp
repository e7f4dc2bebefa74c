#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "qcat/presentation.hpp"
#include "qcat/sampling.hpp"

using namespace qcat;

namespace {

template <class F>
Presentation<F> two_gen(const F& f, const std::string& name,
                        const std::vector<std::vector<long long>>& rows) {
  auto m = Matrix<F>::from_ints(f, rows);
  return {f, name, {"x", "y"}, rows.empty() ? Subspace<F>::zero(f, 4) : Subspace<F>::span(m)};
}

template <class F>
void expect_annihilates(const Presentation<F>& a) {
  const F& f = a.field();
  auto d = dual(a);
  EXPECT_EQ(a.relations().dim() + d.relations().dim(), a.gens() * a.gens());
  for (const auto& r : a.relations().rows())
    for (const auto& s : d.relations().rows()) {
      auto acc = f.zero();
      for (const auto& [i, x] : r)
        for (const auto& [j, y] : s)
          if (i == j) acc = f.add(acc, f.mul(x, y));
      EXPECT_TRUE(f.is_zero(acc));
    }
}

}  // namespace

TEST(Presentation, Sym2DualIsExt2) {
  auto sym2 = support::load<Rationals>("sym2");
  auto ext2 = support::load<Rationals>("ext2");
  EXPECT_EQ(sym2.relations().dim(), 1u);
  EXPECT_TRUE(dual(sym2).same_algebra(ext2));
  EXPECT_TRUE(dual(ext2).same_algebra(sym2));
  EXPECT_EQ(dual(sym2).name(), "Sym2!");
  EXPECT_EQ(dual(sym2).labels(), (std::vector<std::string>{"x!", "y!"}));
}

TEST(Presentation, UnitsAreDualToEachOther) {
  PrimeField f(5);
  EXPECT_TRUE(dual(unit_black(f)).same_algebra(unit_white(f)));
  EXPECT_TRUE(dual(unit_white(f)).same_algebra(unit_black(f)));
  EXPECT_TRUE(dual(free_algebra(f, 3)).same_algebra(embed_vector_space(f, 3)));
}

TEST(Presentation, CorpusDualInvolution) {
  for (const auto& e : support::corpus())
    std::visit(
        [&](const auto& a) {
          EXPECT_EQ(dual(dual(a)), a) << e.file;
          expect_annihilates(a);
        },
        e.algebra);
}

TEST(Presentation, CorpusMatchesConstructors) {
  Rationals q;
  EXPECT_TRUE(support::load<Rationals>("unit_black").same_algebra(unit_black(q)));
  EXPECT_TRUE(support::load<Rationals>("free1").same_algebra(unit_white(q)));
  EXPECT_TRUE(support::load<Rationals>("free2").same_algebra(free_algebra(q, 2)));
  EXPECT_EQ(support::load<Rationals>("embed2"), embed_vector_space(q, 2));
  EXPECT_EQ(support::load<Rationals>("embed3"), embed_vector_space(q, 3));
}

TEST(Presentation, MorphismExamples) {
  Rationals q;
  auto sym2 = support::load<Rationals>("sym2");
  auto swap = Matrix<Rationals>::from_ints(q, {{0, 1}, {1, 0}});
  auto shear = Matrix<Rationals>::from_ints(q, {{1, 1}, {0, 1}});
  EXPECT_TRUE(is_morphism(sym2, sym2, Matrix<Rationals>::identity(q, 2)).ok);
  EXPECT_TRUE(is_morphism(sym2, sym2, swap).ok);
  EXPECT_TRUE(is_morphism(sym2, sym2, shear).ok);
  // (h (x) h)(x (x) x) = x (x) x, so the shear also preserves span{x (x) x}
  auto xx = two_gen(q, "xx", {{1, 0, 0, 0}});
  EXPECT_TRUE(is_morphism(xx, xx, shear).ok);
  // while the transposed shear sends x to x + y and leaves the span
  auto lower = Matrix<Rationals>::from_ints(q, {{1, 0}, {1, 1}});
  auto check = is_morphism(xx, xx, lower);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.residual.empty());
  EXPECT_THROW(Morphism<Rationals>(xx, xx, lower), InvalidMorphism);
}

TEST(Presentation, FieldMismatchThrows) {
  auto a = free_algebra(PrimeField(5), 2);
  auto b = free_algebra(PrimeField(7), 2);
  EXPECT_THROW(black(a, b), FieldMismatch);
}

// closed forms: black c1 c2, white n1^2 c2 + c1 n2^2 - c1 c2
TEST(PresentationProperty, ManinDimensionFormulas) {
  PrimeField f(5);
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto a = random_presentation(f, rng.index_between(1, 3), rng, "A");
    auto b = random_presentation(f, rng.index_between(1, 3), rng, "B");
    const std::size_t n1 = a.gens(), n2 = b.gens(), c1 = a.relations().dim(),
                      c2 = b.relations().dim();
    EXPECT_EQ(black(a, b).relations().dim(), c1 * c2);
    EXPECT_EQ(white(a, b).relations().dim(), n1 * n1 * c2 + c1 * n2 * n2 - c1 * c2);
    EXPECT_EQ(black(a, b).gens(), n1 * n2);
  }
}

TEST(PresentationProperty, BlackContainsShuffledTensors) {
  Rationals q;
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    auto a = random_presentation(q, 2, rng, "A");
    auto b = random_presentation(q, rng.index_between(1, 2), rng, "B");
    auto p = black(a, b);
    auto shuffle = t23(a.gens(), b.gens());
    for (std::size_t i = 0; i < a.relations().dim(); ++i)
      for (std::size_t j = 0; j < b.relations().dim(); ++j) {
        auto ra = to_dense(q, a.relations().row(i), a.gens() * a.gens());
        auto rb = to_dense(q, b.relations().row(j), b.gens() * b.gens());
        auto v = kron(q, std::span<const mpq_class>(ra), std::span<const mpq_class>(rb));
        EXPECT_TRUE(p.relations().contains_vector(shuffle.apply<Rationals>(std::span<const mpq_class>(v))));
      }
  }
}

// (A • B)^! = A^! ∘ B^! as relation spaces.
TEST(PresentationProperty, DualExchangesProducts) {
  PrimeField f(3);
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    auto a = random_presentation(f, rng.index_between(1, 3), rng, "A");
    auto b = random_presentation(f, rng.index_between(1, 2), rng, "B");
    EXPECT_TRUE(dual(black(a, b)).same_algebra(white(dual(a), dual(b))));
    EXPECT_TRUE(dual(white(a, b)).same_algebra(black(dual(a), dual(b))));
  }
}

TEST(PresentationProperty, UnitLaws) {
  PrimeField f(5);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto a = random_presentation(f, rng.index_between(1, 3), rng, "A");
    EXPECT_TRUE(black(a, unit_black(f)).same_algebra(a));
    EXPECT_TRUE(black(unit_black(f), a).same_algebra(a));
    EXPECT_TRUE(white(a, unit_white(f)).same_algebra(a));
    EXPECT_TRUE(white(unit_white(f), a).same_algebra(a));
  }
}

TEST(PresentationProperty, SampledMorphismsAreValid) {
  PrimeField f(5);
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    auto a = random_presentation(f, rng.index_between(1, 3), rng, "A");
    auto m = random_morphism_from(a, rng.index_between(1, 3), rng, "B");
    EXPECT_TRUE(is_morphism(m.src(), m.dst(), m.matrix()).ok);
    auto back = random_morphism_into(a, rng.index_between(1, 3), rng, "C");
    EXPECT_TRUE(is_morphism(back.src(), back.dst(), back.matrix()).ok);
    // the dual of a morphism is a morphism between the duals
    EXPECT_NO_THROW(dual_morphism(m));
  }
}

TEST(PresentationProperty, EndomorphismSamplerAgreesWithExhaustiveList) {
  PrimeField f(3);
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    auto a = random_presentation(f, 2, rng, "A");
    auto all = all_endomorphisms(a);
    Rng inner(t);
    auto some = sample_endomorphisms(a, 1000, inner, 4000);
    EXPECT_LE(some.size(), all.size());
    for (const auto& m : some) EXPECT_TRUE(is_morphism(a, a, m).ok);
  }
}
