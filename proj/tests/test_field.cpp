#include <gtest/gtest.h>

#include "qcat/field.hpp"
#include "qcat/sampling.hpp"

using namespace qcat;

TEST(Field, PrimeFieldArithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.neg(3), 4u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_fraction(1, 2), 4u);
  EXPECT_EQ(f.name(), "GF(7)");
}

TEST(Field, PrimeFieldRejectsBadInput) {
  EXPECT_THROW(PrimeField(8), InvalidField);
  EXPECT_THROW(PrimeField(1), InvalidField);
  PrimeField f(5);
  EXPECT_THROW(f.inv(0), InvalidField);
  EXPECT_THROW(f.from_fraction(1, 5), InvalidField);
}

TEST(Field, RationalsArithmetic) {
  Rationals q;
  auto h = q.from_fraction(2, 4);
  EXPECT_EQ(q.to_string(h), "1/2");
  EXPECT_EQ(q.to_string(q.inv(h)), "2");
  EXPECT_EQ(q.to_string(q.sub(q.zero(), h)), "-1/2");
  EXPECT_THROW(q.inv(q.zero()), InvalidField);
  EXPECT_EQ(q.name(), "Q");
}

TEST(Field, IsPrimeSmallValues) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t k = 0; k < 60; ++k)
    if (is_prime(k)) primes.push_back(k);
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                43, 47, 53, 59}));
  EXPECT_TRUE(is_prime(2147483647ull));
}

// Field axioms on seeded random triples.
TEST(FieldProperty, AxiomsGF) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 65521u}) {
    PrimeField f(p);
    Rng rng(p);
    for (int t = 0; t < 300; ++t) {
      auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(f.sub(a, b), b), a);
      if (!f.is_zero(a)) {
        EXPECT_TRUE(f.is_one(f.mul(a, f.inv(a))));
      }
      auto y = c;
      f.add_mul(y, a, b);
      EXPECT_EQ(y, f.add(c, f.mul(a, b)));
    }
  }
}

TEST(FieldProperty, AxiomsQ) {
  Rationals q;
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    auto a = random_scalar(q, rng), b = random_scalar(q, rng), c = random_scalar(q, rng);
    EXPECT_EQ(q.mul(a, q.add(b, c)), q.add(q.mul(a, b), q.mul(a, c)));
    if (!q.is_zero(a)) {
      EXPECT_TRUE(q.is_one(q.mul(a, q.inv(a))));
    }
    auto y = c;
    q.sub_mul(y, a, b);
    EXPECT_EQ(y, q.sub(c, q.mul(a, b)));
  }
}

TEST(Rng, StreamIsFixed) {
  Rng rng(0);
  std::vector<std::uint64_t> xs;
  for (int i = 0; i < 6; ++i) xs.push_back(rng.below(1000));
  Rng again(0);
  for (auto x : xs) EXPECT_EQ(again.below(1000), x);
  for (int i = 0; i < 1000; ++i) {
    auto v = rng.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}
