#pragma once

/**
 * @file graded.hpp
 * @brief Graded components A_m of a quadratic algebra and multiplication
 * between them.
 *
 * A_m is built as the quotient of A_{m-1} (x) V by the image of
 * A_{m-2} (x) R. The basis of A_m is the set of normal words: the non-pivot
 * columns of the canonical degree-m relation space, which is the same basis
 * quotient_data(n^m, relation_space_in_degree(A, m)) selects.
 */

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qcat/linalg.hpp"
#include "qcat/presentation.hpp"
#include "qcat/tensor.hpp"

namespace qcat {

/// sum_i V^(x)i (x) R (x) V^(x)(m-2-i) inside V^(x)m, computed directly.
template <ExactField F>
Subspace<F> relation_space_in_degree(const Presentation<F>& a, std::size_t m) {
  const F& f = a.field();
  const std::size_t n = a.gens();
  const std::size_t ambient = WordIndex::power(n, m);
  if (m < 2) return Subspace<F>::zero(f, ambient);
  const auto& r = a.relations();
  std::vector<SparseVector<F>> rows;
  for (std::size_t i = 0; i + 2 <= m; ++i) {
    const std::size_t prefixes = WordIndex::power(n, i);
    const std::size_t suffixes = WordIndex::power(n, m - 2 - i);
    for (std::size_t k = 0; k < r.dim(); ++k)
      for (std::size_t pre = 0; pre < prefixes; ++pre)
        for (std::size_t suf = 0; suf < suffixes; ++suf) {
          SparseVector<F> row;
          for (const auto& [w, x] : r.row(k)) row.emplace_back((pre * n * n + w) * suffixes + suf, x);
          rows.push_back(std::move(row));
        }
  }
  return Subspace<F>::span_rows(f, ambient, rows);
}

template <ExactField F>
class GradedAlgebra {
 public:
  using Element = typename F::Element;
  using Sparse = SparseVector<F>;

  explicit GradedAlgebra(Presentation<F> p) : pres_(std::move(p)) {
    const F& f = pres_.field();
    Component c0;
    c0.dim = 1;
    comps_.push_back(std::move(c0));
    Component c1;
    c1.dim = pres_.gens();
    for (std::size_t j = 0; j < pres_.gens(); ++j) {
      c1.step.push_back({{j, f.one()}});
      c1.parent.emplace_back(0, j);
    }
    comps_.push_back(std::move(c1));
  }

  const Presentation<F>& presentation() const { return pres_; }
  const F& field() const { return pres_.field(); }
  std::size_t gens() const { return pres_.gens(); }

  std::size_t dim(std::size_t m) {
    extend_to(m);
    return comps_[m].dim;
  }

  std::vector<std::size_t> hilbert(std::size_t max_degree) {
    std::vector<std::size_t> dims;
    for (std::size_t m = 0; m <= max_degree; ++m) dims.push_back(dim(m));
    return dims;
  }

  /// (basis element b of A_m) * x_j, in A_{m+1} coordinates.
  const Sparse& times_generator(std::size_t m, std::size_t b, std::size_t j) {
    extend_to(m + 1);
    return comps_[m + 1].step[b * gens() + j];
  }

  /// The generator word of basis element b of A_m.
  std::vector<std::size_t> word(std::size_t m, std::size_t b) {
    extend_to(m);
    std::vector<std::size_t> w(m);
    for (std::size_t d = m; d > 0; --d) {
      auto [prev, letter] = comps_[d].parent[b];
      w[d - 1] = letter;
      b = prev;
    }
    return w;
  }

  /// v * x_j for v in A_m.
  Vector<F> right_multiply(std::size_t m, std::span<const Element> v, std::size_t j) {
    const F& f = field();
    Vector<F> out(dim(m + 1), f.zero());
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (f.is_zero(v[b])) continue;
      for (const auto& [k, c] : times_generator(m, b, j)) f.add_mul(out[k], v[b], c);
    }
    return out;
  }

  /// Matrix of v |-> v * x_j, A_m -> A_{m+1}.
  Matrix<F> right_multiplication(std::size_t m, std::size_t j) {
    Matrix<F> out(field(), dim(m + 1), dim(m));
    for (std::size_t b = 0; b < dim(m); ++b)
      for (const auto& [k, c] : times_generator(m, b, j)) out(k, b) = c;
    return out;
  }

  /// Matrix of v |-> x_j * v, A_m -> A_{m+1}.
  Matrix<F> left_multiplication(std::size_t m, std::size_t j) {
    const auto& cols = left_products(m, j);
    Matrix<F> out(field(), dim(m + 1), dim(m));
    for (std::size_t b = 0; b < cols.size(); ++b)
      for (const auto& [k, c] : cols[b]) out(k, b) = c;
    return out;
  }

  /// (basis a of A_s) * (basis b of A_t) in A_{s+t}.
  const Sparse& product(std::size_t s, std::size_t a, std::size_t t, std::size_t b) {
    return product_table(s, t)[a * dim(t) + b];
  }

  /// Dense product of u in A_s and v in A_t.
  Vector<F> multiply(std::size_t s, std::span<const Element> u, std::size_t t,
                     std::span<const Element> v) {
    const F& f = field();
    Vector<F> out(dim(s + t), f.zero());
    for (std::size_t a = 0; a < u.size(); ++a) {
      if (f.is_zero(u[a])) continue;
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (f.is_zero(v[b])) continue;
        auto coef = f.mul(u[a], v[b]);
        for (const auto& [k, c] : product(s, a, t, b)) f.add_mul(out[k], coef, c);
      }
    }
    return out;
  }

  /// Coordinates in A_m of the image of a word of length m.
  Vector<F> reduce_word(std::span<const std::size_t> letters) {
    const F& f = field();
    Vector<F> v{f.one()};
    for (std::size_t d = 0; d < letters.size(); ++d) v = right_multiply(d, v, letters[d]);
    return v;
  }

 private:
  struct Component {
    std::size_t dim = 0;
    // step[b * n + j] = (basis b of the previous degree) * x_j
    std::vector<Sparse> step;
    // basis element -> (basis element of previous degree, last letter)
    std::vector<std::pair<std::size_t, std::size_t>> parent;
  };

  void extend_to(std::size_t m) {
    while (comps_.size() <= m) build_next();
  }

  void build_next() {
    const F& f = field();
    const std::size_t n = gens();
    const std::size_t m = comps_.size();
    const std::size_t prev_dim = comps_[m - 1].dim;
    const std::size_t cols = prev_dim * n;
    const auto& r = pres_.relations();

    detail::EchelonBuilder<F> builder(f, cols);
    if (m == 2) {
      for (const auto& row : r.rows()) builder.add(row);
    } else {
      // image of (basis b of A_{m-2}) (x) R in A_{m-1} (x) V
      const auto& prev = comps_[m - 1];
      const std::size_t prev2_dim = comps_[m - 2].dim;
      Vector<F> row(cols, f.zero());
      for (std::size_t b = 0; b < prev2_dim; ++b)
        for (std::size_t k = 0; k < r.dim(); ++k) {
          std::fill(row.begin(), row.end(), f.zero());
          for (const auto& [w, coef] : r.row(k))
            for (const auto& [idx, val] : prev.step[b * n + w / n])
              f.add_mul(row[idx * n + w % n], coef, val);
          builder.add(row);
        }
    }
    auto echelon = std::move(builder).finish();

    Component comp;
    std::vector<std::ptrdiff_t> pivot_row(cols, -1);
    for (std::size_t i = 0; i < echelon.pivots.size(); ++i)
      pivot_row[echelon.pivots[i]] = static_cast<std::ptrdiff_t>(i);
    std::vector<std::size_t> coordinate(cols, 0);
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_row[col] >= 0) continue;
      coordinate[col] = comp.dim++;
      comp.parent.emplace_back(col / n, col % n);
    }
    comp.step.resize(cols);
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_row[col] < 0) {
        comp.step[col] = {{coordinate[col], f.one()}};
        continue;
      }
      Sparse s;
      for (const auto& [j, x] : echelon.rows[static_cast<std::size_t>(pivot_row[col])])
        if (j != col) s.emplace_back(coordinate[j], f.neg(x));
      comp.step[col] = std::move(s);
    }
    comps_.push_back(std::move(comp));
  }

  // left_[m][j][b] = x_j * (basis b of A_m)
  const std::vector<Sparse>& left_products(std::size_t m, std::size_t j) {
    extend_to(m + 1);
    auto key = std::make_pair(m, j);
    if (auto it = left_.find(key); it != left_.end()) return it->second;
    const F& f = field();
    std::vector<Sparse> cols(comps_[m].dim);
    if (m == 0) {
      cols[0] = {{j, f.one()}};
    } else {
      const auto& shorter = left_products(m - 1, j);
      for (std::size_t b = 0; b < comps_[m].dim; ++b) {
        auto [prev, letter] = comps_[m].parent[b];
        cols[b] = sparse_times_generator(m, shorter[prev], letter);
      }
    }
    return left_.emplace(key, std::move(cols)).first->second;
  }

  // v * x_j for sparse v in A_m
  Sparse sparse_times_generator(std::size_t m, const Sparse& v, std::size_t j) {
    const F& f = field();
    std::map<std::size_t, Element> acc;
    for (const auto& [b, coef] : v)
      for (const auto& [k, c] : times_generator(m, b, j)) {
        auto [it, inserted] = acc.try_emplace(k, f.zero());
        f.add_mul(it->second, coef, c);
      }
    Sparse out;
    for (auto& [k, c] : acc)
      if (!f.is_zero(c)) out.emplace_back(k, std::move(c));
    return out;
  }

  const std::vector<Sparse>& product_table(std::size_t s, std::size_t t) {
    extend_to(s + t);
    auto key = std::make_pair(s, t);
    if (auto it = products_.find(key); it != products_.end()) return it->second;
    const F& f = field();
    const std::size_t ds = comps_[s].dim, dt = comps_[t].dim;
    std::vector<Sparse> table(ds * dt);
    if (t == 0) {
      for (std::size_t a = 0; a < ds; ++a) table[a] = {{a, f.one()}};
    } else {
      const auto& shorter = product_table(s, t - 1);
      const std::size_t dt1 = comps_[t - 1].dim;
      for (std::size_t a = 0; a < ds; ++a)
        for (std::size_t b = 0; b < dt; ++b) {
          auto [prev, letter] = comps_[t].parent[b];
          table[a * dt + b] = sparse_times_generator(s + t - 1, shorter[a * dt1 + prev], letter);
        }
    }
    return products_.emplace(key, std::move(table)).first->second;
  }

  Presentation<F> pres_;
  std::vector<Component> comps_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Sparse>> left_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Sparse>> products_;
};

template <ExactField F>
std::size_t graded_dim(const Presentation<F>& a, std::size_t m) {
  return GradedAlgebra<F>(a).dim(m);
}

template <ExactField F>
std::vector<std::size_t> hilbert(const Presentation<F>& a, std::size_t max_degree) {
  return GradedAlgebra<F>(a).hilbert(max_degree);
}

}  // namespace qcat
