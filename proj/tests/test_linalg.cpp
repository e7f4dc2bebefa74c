#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qcat/linalg.hpp"
#include "qcat/sampling.hpp"

using namespace qcat;

namespace {

template <class F>
F make_field();
template <>
Rationals make_field<Rationals>() { return {}; }
template <>
PrimeField make_field<PrimeField>() { return PrimeField(5); }

// Low-rank matrices exercise the interesting branches more than full-rank ones.
template <class F>
Matrix<F> random_low_rank(const F& f, std::size_t r, std::size_t c, Rng& rng) {
  auto k = rng.index_between(0, std::min(r, c));
  return random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
}

}  // namespace

TEST(Linalg, RrefKnownMatrix) {
  Rationals q;
  auto m = Matrix<Rationals>::from_ints(q, {{2, 4, 2}, {1, 2, 3}, {3, 6, 5}});
  auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.reduced.to_string(), Matrix<Rationals>::from_ints(q, {{1, 2, 0}, {0, 0, 1}}).to_string());
}

TEST(Linalg, KernelAndAnnihilatorSmall) {
  PrimeField f(3);
  auto m = Matrix<PrimeField>::from_ints(f, {{1, 1, 1}});
  auto k = kernel(m);
  EXPECT_EQ(k.dim(), 2u);
  auto s = Subspace<PrimeField>::span(m);
  EXPECT_EQ(annihilator(s), k);
  EXPECT_EQ(annihilator(annihilator(s)), s);
}

TEST(Linalg, InverseAndSolve) {
  Rationals q;
  auto m = Matrix<Rationals>::from_ints(q, {{1, 2}, {3, 4}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((m * *inv).is_identity());
  auto sing = Matrix<Rationals>::from_ints(q, {{1, 2}, {2, 4}});
  EXPECT_FALSE(inverse(sing).has_value());
  Vector<Rationals> b{q.from_int(1), q.from_int(3)};
  EXPECT_FALSE(solve(sing, std::span<const mpq_class>(b)).has_value());
  Vector<Rationals> b2{q.from_int(1), q.from_int(2)};
  auto x = solve(sing, std::span<const mpq_class>(b2));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(sing.apply(*x), b2);
}

TEST(Linalg, SubspaceMismatchedAmbientThrows) {
  PrimeField f(5);
  auto a = Subspace<PrimeField>::zero(f, 3);
  auto b = Subspace<PrimeField>::zero(f, 4);
  EXPECT_THROW(sum(a, b), DimensionMismatch);
  EXPECT_THROW(intersect(a, b), DimensionMismatch);
}

template <class F>
class LinalgProperty : public ::testing::Test {};
using Fields = ::testing::Types<Rationals, PrimeField>;
TYPED_TEST_SUITE(LinalgProperty, Fields);

TYPED_TEST(LinalgProperty, RankMatchesOracle) {
  auto f = make_field<TypeParam>();
  Rng rng(101);
  for (int t = 0; t < 150; ++t) {
    auto m = random_low_rank(f, rng.index_between(1, 7), rng.index_between(1, 7), rng);
    EXPECT_EQ(rank(m), oracle::rank(m)) << m.to_string();
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TYPED_TEST(LinalgProperty, RrefIsCanonical) {
  auto f = make_field<TypeParam>();
  Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    auto m = random_low_rank(f, 5, 6, rng);
    auto g = random_invertible(f, 5, rng);
    // row operations do not change the reduced form
    EXPECT_EQ(rref(g * m).reduced.to_string(), rref(m).reduced.to_string());
    EXPECT_EQ(Subspace<TypeParam>::span(g * m), Subspace<TypeParam>::span(m));
  }
}

TYPED_TEST(LinalgProperty, KernelIsExact) {
  auto f = make_field<TypeParam>();
  Rng rng(303);
  for (int t = 0; t < 100; ++t) {
    auto m = random_low_rank(f, rng.index_between(1, 6), rng.index_between(1, 6), rng);
    auto k = kernel(m);
    EXPECT_EQ(k.dim() + rank(m), m.cols());
    auto b = k.basis();
    if (k.dim() > 0) {
      EXPECT_TRUE((m * b.transpose()).is_zero());
    }
  }
}

TYPED_TEST(LinalgProperty, SumIntersectDimensions) {
  auto f = make_field<TypeParam>();
  Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.index_between(1, 6);
    auto a = Subspace<TypeParam>::span(random_low_rank(f, n, n, rng));
    auto b = Subspace<TypeParam>::span(random_low_rank(f, n, n, rng));
    auto s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(contains(s, a));
    EXPECT_TRUE(contains(a, i));
    EXPECT_TRUE(contains(b, i));
    EXPECT_EQ(annihilator(s), intersect(annihilator(a), annihilator(b)));
    EXPECT_EQ(annihilator(annihilator(a)), a);
  }
}

TYPED_TEST(LinalgProperty, QuotientProjectionKillsSubspace) {
  auto f = make_field<TypeParam>();
  Rng rng(505);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = rng.index_between(1, 6);
    auto s = Subspace<TypeParam>::span(random_low_rank(f, n, n, rng));
    auto q = quotient_data(n, s);
    EXPECT_EQ(q.proj.rows(), n - s.dim());
    if (s.dim() > 0 && q.proj.rows() > 0) {
      EXPECT_TRUE((q.proj * s.basis().transpose()).is_zero());
    }
    EXPECT_TRUE((q.proj * q.section).is_identity());
  }
}

TYPED_TEST(LinalgProperty, InverseRoundTrip) {
  auto f = make_field<TypeParam>();
  Rng rng(606);
  for (int t = 0; t < 60; ++t) {
    auto g = random_invertible(f, rng.index_between(1, 5), rng);
    auto inv = inverse(g);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE((g * *inv).is_identity());
    EXPECT_TRUE((*inv * g).is_identity());
  }
}
