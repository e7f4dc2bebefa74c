#pragma once

/**
 * @file field.hpp
 * @brief Exact ground fields: the rationals and prime fields GF(p).
 *
 * A field is a small value object that owns the arithmetic; its Element type
 * is a plain value. Matrices and subspaces carry their field so that mixing
 * GF(5) with GF(7) data is caught at run time, while mixing Q with GF(p) is a
 * compile-time type error.
 */

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

template <typename F>
concept ExactField = std::equality_comparable<F> && requires(const F f, typename F::Element a,
                                                             typename F::Element b, long long n) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, b) } -> std::same_as<typename F::Element>;
  { f.sub(a, b) } -> std::same_as<typename F::Element>;
  { f.mul(a, b) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.sub_mul(a, b, b) };
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
};

/// The field Q; elements are GMP rationals, always in lowest terms.
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_integer(const mpz_class& v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw InvalidField("zero denominator");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw InvalidField("division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// y <- y - a * x
  void sub_mul(Element& y, const Element& a, const Element& x) const {
    tmp_ = a * x;
    y -= tmp_;
  }
  /// y <- y + a * x
  void add_mul(Element& y, const Element& a, const Element& x) const {
    tmp_ = a * x;
    y += tmp_;
  }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }

 private:
  static inline thread_local mpq_class tmp_;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// GF(p) for a prime p < 2^31; elements are residues 0..p-1.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (1ULL << 31) || !is_prime(p))
      throw InvalidField("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_integer(den);
    if (d == 0) throw InvalidField("denominator vanishes modulo " + std::to_string(p_));
    return mul(from_integer(num), inv(d));
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw InvalidField("division by zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Element>(result);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  void sub_mul(Element& y, Element a, Element x) const { y = sub(y, mul(a, x)); }
  void add_mul(Element& y, Element a, Element x) const { y = add(y, mul(a, x)); }

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

static_assert(ExactField<Rationals>);
static_assert(ExactField<PrimeField>);

template <ExactField F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace qcat
