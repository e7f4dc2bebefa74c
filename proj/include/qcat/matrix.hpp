#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/field.hpp"

namespace qcat {

template <ExactField F>
using Vector = std::vector<typename F::Element>;

/// (index, value) pairs with strictly increasing indices and no zero values.
template <ExactField F>
using SparseVector = std::vector<std::pair<std::size_t, typename F::Element>>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from small integer entries (test and corpus convenience).
  static Matrix from_ints(const F& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged integer matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix column(const F& field, const Vector<F>& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  static Matrix row_vector(const F& field, const Vector<F>& v) {
    Matrix m(field, 1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vector<F> row_copy(std::size_t i) const { return Vector<F>(row(i).begin(), row(i).end()); }
  Vector<F> column_copy(std::size_t j) const {
    Vector<F> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const Element> r) {
    if (r.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  /// Keeps the first n rows.
  void truncate_rows(std::size_t n) {
    if (n >= rows_) return;
    rows_ = n;
    data_.resize(rows_ * cols_);
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Element& e = (*this)(i, j);
        if (i == j ? !(field_.is_zero(field_.sub(e, field_.one()))) : !field_.is_zero(e)) return false;
      }
    return true;
  }

  void reserve_rows(std::size_t n) { data_.reserve(n * cols_); }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector<F> apply(std::span<const Element> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector<F> out(rows_, field_.zero());
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Element& a = (*this)(i, j);
        if (!field_.is_zero(a)) field_.add_mul(out[i], a, v[j]);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    const F& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Element& bkj = b(k, j);
          if (!f.is_zero(bkj)) f.add_mul(c(i, j), aik, bkj);
        }
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

  Matrix scaled(const Element& s) const {
    Matrix m = *this;
    for (auto& e : m.data_) e = field_.mul(e, s);
    return m;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + field_.to_string((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  static Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("shape mismatch " + a.shape() + " vs " + b.shape());
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
      c.data_[i] = subtract ? a.field_.sub(a.data_[i], b.data_[i])
                            : a.field_.add(a.data_[i], b.data_[i]);
    return c;
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <ExactField F>
SparseVector<F> to_sparse(const F& f, std::span<const typename F::Element> v) {
  SparseVector<F> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

template <ExactField F>
Vector<F> to_dense(const F& f, const SparseVector<F>& v, std::size_t n) {
  Vector<F> out(n, f.zero());
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

template <ExactField F>
bool is_zero_vector(const F& f, std::span<const typename F::Element> v) {
  for (const auto& e : v)
    if (!f.is_zero(e)) return false;
  return true;
}

}  // namespace qcat
