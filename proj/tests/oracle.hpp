#pragma once

// Reference computations written independently of the library: sparse
// forward elimination over std::map rows, ideal spans built word by word, and
// series arithmetic on plain integers. Slow but simple.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "qcat/field.hpp"
#include "qcat/matrix.hpp"

namespace oracle {

// Scalars are carried as mpq_class for both fields; mod p they are reduced
// to canonical residues after every operation.
struct Arith {
  std::uint64_t p = 0;  // 0 means Q

  mpq_class norm(mpq_class x) const {
    if (p == 0) return x;
    mpz_class num = x.get_num(), den = x.get_den(), pp = static_cast<unsigned long>(p);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    mpz_class r = num * inv % pp;
    if (r < 0) r += pp;
    return mpq_class(r);
  }
  mpq_class inv(const mpq_class& x) const {
    if (p == 0) return 1 / x;
    mpz_class pp = static_cast<unsigned long>(p), num = x.get_num(), r;
    mpz_invert(r.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    return mpq_class(r);
  }
};

inline Arith arith(const qcat::Rationals&) { return {0}; }
inline Arith arith(const qcat::PrimeField& f) { return {f.modulus()}; }

inline mpq_class to_q(const qcat::Rationals&, const mpq_class& x) { return x; }
inline mpq_class to_q(const qcat::PrimeField&, std::uint32_t x) { return mpq_class(static_cast<unsigned long>(x)); }

using Row = std::map<std::size_t, mpq_class>;

class Eliminator {
 public:
  explicit Eliminator(Arith a) : a_(a) {}

  bool insert(Row r) {
    for (;;) {
      for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
      if (r.empty()) return false;
      auto lead = r.begin()->first;
      auto piv = pivots_.find(lead);
      if (piv == pivots_.end()) {
        mpq_class s = a_.inv(r.begin()->second);
        for (auto& [c, v] : r) v = a_.norm(v * s);
        pivots_.emplace(lead, std::move(r));
        return true;
      }
      mpq_class s = r.begin()->second;
      for (const auto& [c, v] : piv->second) r[c] = a_.norm(r[c] - s * v);
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  Arith a_;
  std::map<std::size_t, Row> pivots_;
};

template <class F>
std::size_t rank(const qcat::Matrix<F>& m) {
  Eliminator e(arith(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto q = to_q(m.field(), m(i, j));
      if (q != 0) r[j] = q;
    }
    e.insert(std::move(r));
  }
  return e.rank();
}

inline std::size_t ipow(std::size_t n, std::size_t m) {
  std::size_t r = 1;
  while (m--) r *= n;
  return r;
}

// dim A_m = n^m - dim sum_i V^i (x) R (x) V^(m-2-i), spanned word by word.
template <class F>
std::size_t graded_dim(const F& f, std::size_t n, const qcat::Matrix<F>& relations, std::size_t m) {
  if (m < 2) return ipow(n, m);
  Eliminator e(arith(f));
  for (std::size_t i = 0; i + 2 <= m; ++i) {
    const std::size_t left = ipow(n, i), right = ipow(n, m - 2 - i);
    for (std::size_t k = 0; k < relations.rows(); ++k)
      for (std::size_t a = 0; a < left; ++a)
        for (std::size_t b = 0; b < right; ++b) {
          Row r;
          for (std::size_t w = 0; w < n * n; ++w) {
            auto q = to_q(f, relations(k, w));
            if (q != 0) r[(a * n * n + w) * right + b] = q;
          }
          e.insert(std::move(r));
        }
  }
  return ipow(n, m) - e.rank();
}

// Coefficients of H_A(t) * H_{A^!}(-t) up to degree N.
inline std::vector<long long> euler_product(const std::vector<std::size_t>& a,
                                            const std::vector<std::size_t>& d, std::size_t N) {
  std::vector<long long> out(N + 1, 0);
  for (std::size_t i = 0; i <= N && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= N && j < d.size(); ++j)
      out[i + j] += static_cast<long long>(a[i] * d[j]) * (j % 2 ? -1 : 1);
  return out;
}

}  // namespace oracle
