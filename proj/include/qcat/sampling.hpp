#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded generators for presentations, morphisms and endomorphisms.
 *
 * The morphism condition (M (x) M)(R_src) ⊆ R_dst is quadratic in M, so a
 * random matrix between two fixed algebras is almost never a morphism.
 * Instead the generators fix the matrix first and then build an endpoint
 * that makes it valid: a pushforward target contains (M (x) M)(R_src), a
 * pullback source lies inside the preimage of R_dst.
 *
 * Every draw goes through Rng::below, which does its own rejection sampling
 * on top of mt19937_64, so streams are identical across standard libraries.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcat/field.hpp"
#include "qcat/linalg.hpp"
#include "qcat/matrix.hpp"
#include "qcat/presentation.hpp"
#include "qcat/tensor.hpp"

namespace qcat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  std::size_t index_between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline PrimeField::Element random_scalar(const PrimeField& f, Rng& rng) {
  return static_cast<PrimeField::Element>(rng.below(f.modulus()));
}

/// Small numerators and denominators keep rational entries readable.
inline Rationals::Element random_scalar(const Rationals& f, Rng& rng) {
  long long num = rng.between(-3, 3);
  long long den = rng.below(4) == 0 ? rng.between(2, 3) : 1;
  return f.from_fraction(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

template <ExactField F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<F> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

template <ExactField F>
Matrix<F> random_invertible(const F& f, std::size_t n, Rng& rng) {
  for (;;) {
    auto m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

/// Span of `count` random combinations of the rows of `within`.
template <ExactField F>
Subspace<F> random_subspace_of(const Subspace<F>& within, std::size_t count, Rng& rng) {
  const F& f = within.field();
  if (within.is_zero() || count == 0) return Subspace<F>::zero(f, within.ambient_dim());
  Matrix<F> rows(f, count, within.ambient_dim());
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < within.dim(); ++i) {
      auto c = random_scalar(f, rng);
      if (f.is_zero(c)) continue;
      for (const auto& [j, x] : within.row(i)) f.add_mul(rows(k, j), c, x);
    }
  return Subspace<F>::span(rows);
}

template <ExactField F>
Subspace<F> random_subspace(const F& f, std::size_t ambient, std::size_t count, Rng& rng) {
  return Subspace<F>::span(random_matrix(f, count, ambient, rng));
}

/// n generators and a random relation space; one draw in four is free and one
/// in eight has full relations.
template <ExactField F>
Presentation<F> random_presentation(const F& f, std::size_t n, Rng& rng, std::string name) {
  const std::size_t ambient = n * n;
  Subspace<F> r = Subspace<F>::zero(f, ambient);
  switch (rng.below(8)) {
    case 0:
    case 1:
      break;
    case 2:
      r = Subspace<F>::full(f, ambient);
      break;
    default:
      r = random_subspace(f, ambient, rng.index_between(1, ambient), rng);
  }
  return {f, std::move(name), indexed_labels("x", n), std::move(r)};
}

/// A target on `m.rows()` generators for which m is a morphism out of `src`:
/// relations (m (x) m)(R_src) plus `extra` random relations.
template <ExactField F>
Presentation<F> pushforward(const Presentation<F>& src, const Matrix<F>& m, std::size_t extra,
                            Rng& rng, std::string name) {
  const F& f = src.field();
  auto image = push_tensor_square(m, src.relations());
  const std::size_t ambient = m.rows() * m.rows();
  auto r = sum(image, random_subspace(f, ambient, extra, rng));
  return {f, std::move(name), indexed_labels("y", m.rows()), std::move(r)};
}

/// (m (x) m)^{-1}(R_dst), the largest relation space making m a morphism into dst.
template <ExactField F>
Subspace<F> preimage_relations(const Presentation<F>& dst, const Matrix<F>& m) {
  auto q = quotient_data(dst.gens() * dst.gens(), dst.relations());
  return kernel(q.proj * kron(m, m));
}

/// A source on `m.cols()` generators for which m is a morphism into `dst`.
template <ExactField F>
Presentation<F> pullback(const Presentation<F>& dst, const Matrix<F>& m, std::size_t count,
                         Rng& rng, std::string name) {
  auto r = random_subspace_of(preimage_relations(dst, m), count, rng);
  return {dst.field(), std::move(name), indexed_labels("z", m.cols()), std::move(r)};
}

/// A random morphism out of `src` into a pushforward target on `n` generators.
template <ExactField F>
Morphism<F> random_morphism_from(const Presentation<F>& src, std::size_t n, Rng& rng,
                                 std::string target_name) {
  auto m = random_matrix(src.field(), n, src.gens(), rng);
  auto dst = pushforward(src, m, static_cast<std::size_t>(rng.below(3)), rng,
                         std::move(target_name));
  return Morphism<F>(src, std::move(dst), std::move(m));
}

/// A random morphism into `dst` from a pullback source on `n` generators.
template <ExactField F>
Morphism<F> random_morphism_into(const Presentation<F>& dst, std::size_t n, Rng& rng,
                                 std::string source_name) {
  auto m = random_matrix(dst.field(), dst.gens(), n, rng);
  auto count = rng.index_between(0, n * n);
  auto src = pullback(dst, m, count, rng, std::move(source_name));
  return Morphism<F>(std::move(src), dst, std::move(m));
}

namespace detail {

template <ExactField F>
bool has_no_relations_or_all(const Presentation<F>& a) {
  return a.relations().is_zero() || a.relations().is_full();
}

// All permutation matrices of size n (n! of them; n is small here).
template <ExactField F>
std::vector<Matrix<F>> permutation_matrices(const F& f, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<Matrix<F>> out;
  do {
    Matrix<F> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(p[i], i) = f.one();
    out.push_back(std::move(m));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <ExactField F>
std::string matrix_key(const Matrix<F>& m) {
  return m.to_string();
}

}  // namespace detail

/// Every endomorphism of A over a finite field, in lexicographic order of entries.
inline std::vector<Matrix<PrimeField>> all_endomorphisms(const Presentation<PrimeField>& a) {
  const PrimeField& f = a.field();
  const std::size_t n = a.gens(), cells = n * n;
  std::vector<Matrix<PrimeField>> out;
  std::vector<std::uint32_t> digits(cells, 0);
  for (;;) {
    Matrix<PrimeField> m(f, n, n);
    for (std::size_t k = 0; k < cells; ++k) m(k / n, k % n) = digits[k];
    if (is_morphism(a, a, m).ok) out.push_back(std::move(m));
    std::size_t k = cells;
    while (k > 0 && ++digits[k - 1] == f.modulus()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

/// Up to `count` distinct valid endomorphisms of A drawn from fixed families:
/// zero, identity, multiples of earlier finds, relation-preserving permutations, rank-one maps
/// v w^T with w (x) w annihilating R or v (x) v in R, composites of those, and
/// rejection-sampled matrices (every matrix when A is free or has full
/// relations). Fewer are returned only when the budget runs out.
template <ExactField F>
std::vector<Matrix<F>> sample_endomorphisms(const Presentation<F>& a, std::size_t count, Rng& rng,
                                            std::size_t budget = 20000) {
  const F& f = a.field();
  const std::size_t n = a.gens();
  std::vector<Matrix<F>> out;
  std::set<std::string> seen;
  auto offer = [&](const Matrix<F>& m) {
    if (out.size() >= count) return;
    if (!is_morphism(a, a, m).ok) return;
    if (seen.insert(detail::matrix_key(m)).second) out.push_back(m);
  };
  offer(Matrix<F>::identity(f, n));
  offer(Matrix<F>(f, n, n));
  if (n <= 4)
    for (const auto& p : detail::permutation_matrices(f, n)) offer(p);
  const bool anything_goes = detail::has_no_relations_or_all(a);
  for (std::size_t trial = 0; trial < budget && out.size() < count; ++trial) {
    switch (anything_goes ? (rng.coin() ? 0 : 3) : rng.below(4)) {
      case 0:  // the morphism condition is homogeneous, so multiples stay valid
        offer(out[rng.below(out.size())].scaled(random_scalar(f, rng)));
        break;
      case 1: {
        auto v = random_matrix(f, n, 1, rng);
        auto w = random_matrix(f, 1, n, rng);
        offer(v * w);
        break;
      }
      case 2:
        if (out.size() >= 2)
          offer(out[rng.below(out.size())] * out[rng.below(out.size())]);
        break;
      default:
        offer(random_matrix(f, n, n, rng));
    }
  }
  return out;
}

/// A seeded family of `count` presentations on two or three generators whose
/// relation spaces are neither zero nor everything, named <stem><index>.
template <ExactField F>
std::vector<Presentation<F>> random_family(const F& f, std::size_t count, std::uint64_t seed,
                                           const std::string& stem) {
  Rng rng(seed);
  std::vector<Presentation<F>> out;
  while (out.size() < count) {
    const std::size_t n = rng.index_between(2, 3);
    auto r = random_subspace(f, n * n, rng.index_between(1, n * n - 1), rng);
    if (r.is_zero() || r.is_full()) continue;
    out.push_back({f, stem + std::to_string(out.size()), indexed_labels("x", n), std::move(r)});
  }
  return out;
}

}  // namespace qcat
