#pragma once

/**
 * @file linalg.hpp
 * @brief Exact Gauss-Jordan elimination and the subspace calculus.
 *
 * A Subspace is held by the reduced row-echelon form of a basis, so two
 * subspaces are equal as sets exactly when their stored bases are equal.
 * Rows are stored sparsely: relation spaces of iterated products live in
 * ambient spaces of a few thousand words with few nonzeros per row.
 *
 * The reduced row-echelon form of a matrix is unique, so inserting rows one
 * at a time and back-substituting at the end yields the same matrix as
 * textbook pivoting.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/field.hpp"
#include "qcat/matrix.hpp"

namespace qcat {

namespace detail {

/// Incremental row-echelon form over a dense scratch row.
template <ExactField F>
class EchelonBuilder {
 public:
  using Element = typename F::Element;

  struct Result {
    std::vector<SparseVector<F>> rows;  // fully reduced, ordered by pivot
    std::vector<std::size_t> pivots;
  };

  EchelonBuilder(F field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), acc_(cols, field_.zero()), pivot_row_(cols, -1) {}

  std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row was independent of those added so far.
  bool add(std::span<const Element> v) {
    if (v.size() != cols_) throw DimensionMismatch("row length differs from ambient");
    std::size_t first = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_.is_zero(v[j])) {
        acc_[j] = v[j];
        if (first == cols_) first = j;
      }
    return first < cols_ && absorb(first);
  }

  bool add(const SparseVector<F>& v) {
    if (v.empty()) return false;
    if (v.back().first >= cols_) throw DimensionMismatch("sparse row index outside ambient");
    for (const auto& [j, x] : v) acc_[j] = x;
    return absorb(v.front().first);
  }

  Result finish() && {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    // largest pivot first, so every row used for substitution is already reduced
    for (std::size_t k = order.size(); k-- > 0;) {
      auto& row = rows_[order[k]];
      bool touches = false;
      for (std::size_t t = 1; t < row.size() && !touches; ++t)
        touches = pivot_row_[row[t].first] >= 0;
      if (!touches) continue;
      const std::size_t p = pivots_[order[k]];
      for (const auto& [j, x] : row) acc_[j] = x;
      for (std::size_t j = p + 1; j < cols_; ++j) {
        if (pivot_row_[j] < 0 || field_.is_zero(acc_[j])) continue;
        Element factor = acc_[j];
        for (const auto& [c, y] : rows_[static_cast<std::size_t>(pivot_row_[j])])
          field_.sub_mul(acc_[c], factor, y);
      }
      row = extract(p);
    }
    Result r;
    for (auto i : order) {
      r.rows.push_back(std::move(rows_[i]));
      r.pivots.push_back(pivots_[i]);
    }
    return r;
  }

 private:
  // acc_ is nonzero only at indices >= start; it is left all zero.
  bool absorb(std::size_t start) {
    std::size_t lead = cols_;
    for (std::size_t j = start; j < cols_; ++j) {
      if (field_.is_zero(acc_[j])) continue;
      if (pivot_row_[j] < 0) {
        if (lead == cols_) lead = j;
        continue;
      }
      Element factor = acc_[j];
      for (const auto& [c, y] : rows_[static_cast<std::size_t>(pivot_row_[j])])
        field_.sub_mul(acc_[c], factor, y);
    }
    if (lead == cols_) return false;
    if (!field_.is_one(acc_[lead])) {
      Element inv = field_.inv(acc_[lead]);
      for (std::size_t j = lead; j < cols_; ++j)
        if (!field_.is_zero(acc_[j])) acc_[j] = field_.mul(acc_[j], inv);
    }
    pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(extract(lead));
    return true;
  }

  SparseVector<F> extract(std::size_t from) {
    SparseVector<F> out;
    for (std::size_t j = from; j < cols_; ++j)
      if (!field_.is_zero(acc_[j])) {
        out.emplace_back(j, acc_[j]);
        acc_[j] = field_.zero();
      }
    return out;
  }

  F field_;
  std::size_t cols_;
  Vector<F> acc_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<SparseVector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

template <ExactField F>
struct Rref {
  Matrix<F> reduced;  // zero rows dropped
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
Rref<F> rref(const Matrix<F>& m) {
  detail::EchelonBuilder<F> b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
  auto r = std::move(b).finish();
  Matrix<F> reduced(m.field(), r.rows.size(), m.cols());
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (const auto& [j, x] : r.rows[i]) reduced(i, j) = x;
  const std::size_t rk = r.pivots.size();
  return {std::move(reduced), rk, std::move(r.pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  if (m.rows() > m.cols()) return rank(m.transpose());
  detail::EchelonBuilder<F> b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row(i));
  return b.rank();
}

/// A subspace of F^ambient held by its canonical (RREF) basis.
template <ExactField F>
class Subspace {
 public:
  using Element = typename F::Element;

  /// The span of the rows of `generators`.
  static Subspace span(const Matrix<F>& generators) {
    detail::EchelonBuilder<F> b(generators.field(), generators.cols());
    for (std::size_t i = 0; i < generators.rows(); ++i) b.add(generators.row(i));
    return Subspace(generators.field(), generators.cols(), std::move(b).finish());
  }

  static Subspace span_rows(const F& field, std::size_t ambient,
                            const std::vector<SparseVector<F>>& rows) {
    detail::EchelonBuilder<F> b(field, ambient);
    for (const auto& r : rows) b.add(r);
    return Subspace(field, ambient, std::move(b).finish());
  }

  /// Adopts the output of an EchelonBuilder over F^ambient.
  static Subspace from_echelon(const F& field, std::size_t ambient,
                               typename detail::EchelonBuilder<F>::Result r) {
    return Subspace(field, ambient, std::move(r));
  }

  static Subspace zero(const F& field, std::size_t ambient) { return Subspace(field, ambient, {}); }

  static Subspace full(const F& field, std::size_t ambient) {
    typename detail::EchelonBuilder<F>::Result r;
    for (std::size_t i = 0; i < ambient; ++i) {
      r.rows.push_back({{i, field.one()}});
      r.pivots.push_back(i);
    }
    return Subspace(field, ambient, std::move(r));
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  const SparseVector<F>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseVector<F>>& rows() const { return rows_; }

  /// The canonical basis as a dense dim x ambient matrix (built on each call).
  Matrix<F> basis() const {
    Matrix<F> m(field_, dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (const auto& [j, x] : rows_[i]) m(i, j) = x;
    return m;
  }

  /// v reduced against the basis; zero iff v lies in the subspace.
  Vector<F> residual(std::span<const Element> v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector length differs from ambient");
    Vector<F> r(v.begin(), v.end());
    reduce_in_place(r);
    return r;
  }

  Vector<F> residual(const SparseVector<F>& v) const {
    if (!v.empty() && v.back().first >= ambient_)
      throw DimensionMismatch("vector length differs from ambient");
    Vector<F> r = to_dense(field_, v, ambient_);
    reduce_in_place(r);
    return r;
  }

  bool contains_vector(std::span<const Element> v) const {
    return is_zero_vector(field_, std::span<const Element>(residual(v)));
  }

  bool contains_vector(const SparseVector<F>& v) const {
    return is_zero_vector(field_, std::span<const Element>(residual(v)));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.rows_ == b.rows_;
  }

 private:
  Subspace(F field, std::size_t ambient, typename detail::EchelonBuilder<F>::Result r)
      : field_(std::move(field)),
        ambient_(ambient),
        rows_(std::move(r.rows)),
        pivots_(std::move(r.pivots)) {}

  // rows are fully reduced, so one pass in pivot order clears every pivot column
  void reduce_in_place(Vector<F>& r) const {
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(r[pivots_[i]])) continue;
      Element factor = r[pivots_[i]];
      for (const auto& [j, x] : rows_[i]) field_.sub_mul(r[j], factor, x);
    }
  }

  F field_;
  std::size_t ambient_;
  std::vector<SparseVector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix<F> m = a;
  m.reserve_rows(a.rows() + b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
  return m;
}

namespace detail {

// Null space of the matrix whose reduced rows are `rows` with pivot columns `pivots`.
template <ExactField F>
Subspace<F> kernel_of_reduced(const F& f, std::size_t cols, const std::vector<SparseVector<F>>& rows,
                              const std::vector<std::size_t>& pivots) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  // free column j contributes e_j - sum_i rows[i][j] e_{pivots[i]}
  std::vector<SparseVector<F>> gens(cols);
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) gens[j].emplace_back(j, f.one());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, x] : rows[i])
      if (!is_pivot[j]) gens[j].emplace_back(pivots[i], f.neg(x));
  std::vector<SparseVector<F>> out;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::sort(gens[j].begin(), gens[j].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(gens[j]));
  }
  return Subspace<F>::span_rows(f, cols, out);
}

}  // namespace detail

/// Null space {v : M v = 0}.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto s = Subspace<F>::span(m);
  return detail::kernel_of_reduced(m.field(), m.cols(), s.rows(), s.pivots());
}

template <ExactField F>
void require_same_ambient(const Subspace<F>& a, const Subspace<F>& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("ambient dimensions differ: " + std::to_string(a.ambient_dim()) +
                            " vs " + std::to_string(b.ambient_dim()));
}

/// B is contained in A.
template <ExactField F>
bool contains(const Subspace<F>& a, const Subspace<F>& b) {
  require_same_ambient(a, b);
  if (b.dim() > a.dim()) return false;
  if (a.is_full()) return true;
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains_vector(b.row(i))) return false;
  return true;
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  require_same_ambient(a, b);
  std::vector<SparseVector<F>> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subspace<F>::span_rows(a.field(), a.ambient_dim(), rows);
}

/// Annihilator under the dual-basis pairing; it lives in a space of the same dimension.
template <ExactField F>
Subspace<F> annihilator(const Subspace<F>& s) {
  return detail::kernel_of_reduced(s.field(), s.ambient_dim(), s.rows(), s.pivots());
}

template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  require_same_ambient(a, b);
  auto result = annihilator(sum(annihilator(a), annihilator(b)));
  if (a.dim() + b.dim() != sum(a, b).dim() + result.dim())
    throw Error("modular law violated in intersect (internal error)");
  return result;
}

/// Projection onto F^ambient / S and a right inverse, indexed by the non-pivot columns of S.
template <ExactField F>
struct QuotientData {
  Matrix<F> proj;     // (ambient - dim S) x ambient
  Matrix<F> section;  // ambient x (ambient - dim S)
  std::vector<std::size_t> coordinates;  // non-pivot columns, in order
};

template <ExactField F>
QuotientData<F> quotient_data(std::size_t ambient, const Subspace<F>& s) {
  if (s.ambient_dim() != ambient) throw DimensionMismatch("quotient_data: ambient mismatch");
  const F& f = s.field();
  std::vector<std::ptrdiff_t> coord_of(ambient, 0);
  for (auto p : s.pivots()) coord_of[p] = -1;
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < ambient; ++c)
    if (coord_of[c] >= 0) {
      coord_of[c] = static_cast<std::ptrdiff_t>(coords.size());
      coords.push_back(c);
    }
  Matrix<F> proj(f, coords.size(), ambient);
  Matrix<F> section(f, ambient, coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    proj(k, coords[k]) = f.one();
    section(coords[k], k) = f.one();
  }
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (const auto& [j, x] : s.row(i))
      if (coord_of[j] >= 0) proj(static_cast<std::size_t>(coord_of[j]), s.pivots()[i]) = f.neg(x);
  return {std::move(proj), std::move(section), std::move(coords)};
}

/// Some x with A x = b, or nothing when the system is inconsistent.
template <ExactField F>
std::optional<Vector<F>> solve(const Matrix<F>& a, std::span<const typename F::Element> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  const F& f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto r = rref(aug);
  Vector<F> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, a.cols());
  }
  return x;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const F& f = m.field();
  const std::size_t n = m.rows();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

template <ExactField F>
typename F::Element trace(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("trace of a non-square matrix");
  auto t = m.field().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t = m.field().add(t, m(i, i));
  return t;
}

}  // namespace qcat
