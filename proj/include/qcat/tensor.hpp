#pragma once

/**
 * @file tensor.hpp
 * @brief Word indexing of tensor powers and the permutations between them.
 *
 * A word (l_0, ..., l_{m-1}) over an alphabet of size n is the basis vector
 * e_{l_0} (x) ... (x) e_{l_{m-1}} of V^{(x)m}; its linear index is
 * sum_j l_j n^(m-1-j) (big-endian, row-major). Kronecker products, the
 * middle-factor shuffle t23 and the flips all follow this convention and
 * nothing else in the library does index arithmetic on its own.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/linalg.hpp"
#include "qcat/matrix.hpp"

namespace qcat {

struct WordIndex {
  static std::size_t encode(std::span<const std::size_t> letters, std::size_t n) {
    std::size_t index = 0;
    for (auto l : letters) {
      if (l >= n) throw DimensionMismatch("letter outside alphabet");
      index = index * n + l;
    }
    return index;
  }

  static std::vector<std::size_t> decode(std::size_t index, std::size_t n, std::size_t length) {
    std::vector<std::size_t> letters(length);
    for (std::size_t j = length; j-- > 0;) {
      letters[j] = index % n;
      index /= n;
    }
    return letters;
  }

  static std::size_t power(std::size_t n, std::size_t m) {
    std::size_t p = 1;
    while (m--) p *= n;
    return p;
  }
};

/// Bijection of {0..size-1}; basis vector i is sent to basis vector image[i].
class PermutationMap {
 public:
  explicit PermutationMap(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto i : image_) {
      if (i >= image_.size() || seen[i]) throw DimensionMismatch("not a permutation");
      seen[i] = true;
    }
  }

  static PermutationMap identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return PermutationMap(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  PermutationMap inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return PermutationMap(std::move(inv));
  }

  /// (this after other)
  PermutationMap after(const PermutationMap& other) const {
    if (other.size() != size()) throw DimensionMismatch("composing permutations of different size");
    std::vector<std::size_t> image(size());
    for (std::size_t i = 0; i < size(); ++i) image[i] = image_[other(i)];
    return PermutationMap(std::move(image));
  }

  template <ExactField F>
  Vector<F> apply(std::span<const typename F::Element> v) const {
    if (v.size() != size()) throw DimensionMismatch("permutation applied to wrong length");
    Vector<F> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[image_[i]] = v[i];
    return out;
  }

  template <ExactField F>
  Matrix<F> matrix(const F& field) const {
    Matrix<F> m(field, size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(image_[i], i) = field.one();
    return m;
  }

  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// t23 : U1 (x) U1 (x) V1 (x) V1 -> (U1 (x) V1) (x) (U1 (x) V1), (a,a',b,b') |-> ((a,b),(a',b')).
inline PermutationMap t23(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw DimensionMismatch("t23 needs nonempty alphabets");
  const std::size_t gens = n1 * n2;
  std::vector<std::size_t> image(gens * gens);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t a2 = 0; a2 < n1; ++a2)
      for (std::size_t b = 0; b < n2; ++b)
        for (std::size_t b2 = 0; b2 < n2; ++b2) {
          std::size_t src = ((a * n1 + a2) * n2 + b) * n2 + b2;
          image[src] = (a * n2 + b) * gens + (a2 * n2 + b2);
        }
  return PermutationMap(std::move(image));
}

/// U1 (x) V1 -> V1 (x) U1, (a,b) |-> (b,a).
inline PermutationMap flip(std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw DimensionMismatch("flip needs nonempty alphabets");
  std::vector<std::size_t> image(n1 * n2);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) image[a * n2 + b] = b * n1 + a;
  return PermutationMap(std::move(image));
}

/// P (x) P on words of length two.
inline PermutationMap tensor_square(const PermutationMap& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> image(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) image[i * n + j] = p(i) * n + p(j);
  return PermutationMap(std::move(image));
}

template <ExactField F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_field(a.field(), b.field());
  const F& f = a.field();
  Matrix<F> k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!f.is_zero(b(p, q))) k(i * b.rows() + p, j * b.cols() + q) = f.mul(a(i, j), b(p, q));
    }
  return k;
}

template <ExactField F>
Vector<F> kron(const F& f, std::span<const typename F::Element> a,
               std::span<const typename F::Element> b) {
  Vector<F> out(a.size() * b.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!f.is_zero(b[j])) out[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return out;
}

/// (M (x) M) v for v in the square of M's source, computed as M V M^T.
template <ExactField F>
Vector<F> apply_tensor_square(const Matrix<F>& m, std::span<const typename F::Element> v) {
  const F& f = m.field();
  const std::size_t n = m.cols(), t = m.rows();
  if (v.size() != n * n) throw DimensionMismatch("tensor square applied to wrong length");
  // tmp = V M^T : n x t, tmp[a][q] = sum_b v[a][b] m[q][b]
  Vector<F> tmp(n * t, f.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& vab = v[a * n + b];
      if (f.is_zero(vab)) continue;
      for (std::size_t q = 0; q < t; ++q)
        if (!f.is_zero(m(q, b))) f.add_mul(tmp[a * t + q], vab, m(q, b));
    }
  Vector<F> out(t * t, f.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t q = 0; q < t; ++q) {
      const auto& x = tmp[a * t + q];
      if (f.is_zero(x)) continue;
      for (std::size_t p = 0; p < t; ++p)
        if (!f.is_zero(m(p, a))) f.add_mul(out[p * t + q], m(p, a), x);
    }
  return out;
}

template <ExactField F>
Subspace<F> push_subspace(const PermutationMap& p, const Subspace<F>& s) {
  if (p.size() != s.ambient_dim()) throw DimensionMismatch("push_subspace: size mismatch");
  std::vector<SparseVector<F>> rows(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (const auto& [j, x] : s.row(i)) rows[i].emplace_back(p(j), x);
    std::sort(rows[i].begin(), rows[i].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return Subspace<F>::span_rows(s.field(), p.size(), rows);
}

template <ExactField F>
Subspace<F> push_subspace(const Matrix<F>& m, const Subspace<F>& s) {
  require_same_field(m.field(), s.field());
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("push_subspace: size mismatch");
  const F& f = m.field();
  detail::EchelonBuilder<F> b(f, m.rows());
  Vector<F> image(m.rows(), f.zero());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::fill(image.begin(), image.end(), f.zero());
    for (const auto& [j, x] : s.row(i))
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!f.is_zero(m(r, j))) f.add_mul(image[r], m(r, j), x);
    b.add(image);
  }
  return Subspace<F>::from_echelon(f, m.rows(), std::move(b).finish());
}

/// Image of S under M (x) M, S living in the tensor square of M's source.
template <ExactField F>
Subspace<F> push_tensor_square(const Matrix<F>& m, const Subspace<F>& s) {
  require_same_field(m.field(), s.field());
  const std::size_t n = m.cols(), t = m.rows();
  if (n * n != s.ambient_dim()) throw DimensionMismatch("push_tensor_square: size mismatch");
  const F& f = m.field();
  // sparse columns of M
  std::vector<SparseVector<F>> col(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < t; ++r)
      if (!f.is_zero(m(r, j))) col[j].emplace_back(r, m(r, j));
  detail::EchelonBuilder<F> b(f, t * t);
  Vector<F> image(t * t, f.zero());
  typename F::Element coef = f.zero();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::fill(image.begin(), image.end(), f.zero());
    for (const auto& [idx, x] : s.row(i)) {
      const std::size_t a = idx / n, c = idx % n;
      for (const auto& [p, y] : col[a]) {
        coef = f.mul(x, y);
        for (const auto& [q, z] : col[c]) f.add_mul(image[p * t + q], coef, z);
      }
    }
    b.add(image);
  }
  return Subspace<F>::from_echelon(f, t * t, std::move(b).finish());
}

/// Span of {r (x) s : r in A, s in B}.
template <ExactField F>
Subspace<F> tensor_subspace(const Subspace<F>& a, const Subspace<F>& b) {
  require_same_field(a.field(), b.field());
  const F& f = a.field();
  const std::size_t nb = b.ambient_dim();
  // rows of A (x) B in RREF are already independent; their pivots are (pa, pb)
  std::vector<SparseVector<F>> rows;
  rows.reserve(a.dim() * b.dim());
  for (const auto& ra : a.rows())
    for (const auto& rb : b.rows()) {
      SparseVector<F> v;
      v.reserve(ra.size() * rb.size());
      for (const auto& [i, x] : ra)
        for (const auto& [j, y] : rb) v.emplace_back(i * nb + j, f.mul(x, y));
      rows.push_back(std::move(v));
    }
  return Subspace<F>::span_rows(f, a.ambient_dim() * nb, rows);
}

}  // namespace qcat
