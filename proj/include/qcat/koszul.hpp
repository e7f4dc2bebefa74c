#pragma once

/**
 * @file koszul.hpp
 * @brief Canonical elements, the d_h square test, Koszul complexes sliced by
 * internal degree, the Euler-Hilbert identity and the reduced bar complex.
 *
 * Every verdict here is "up to degree N": slices are finite, exactness is a
 * rank computation, and nothing claims unconditional Koszulity.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/graded.hpp"
#include "qcat/linalg.hpp"
#include "qcat/presentation.hpp"

namespace qcat {

/// sum_i u_i (x) u^i in A_1 (x) (A^!)_1, index i * n + i.
template <ExactField F>
Vector<F> alpha(const Presentation<F>& a) {
  return canonical_element(a);
}

/// sum_i h(u_i) (x) u^i; coordinate (k, i) is h(k, i).
template <ExactField F>
Vector<F> alpha_h(const Presentation<F>& a, const Matrix<F>& h) {
  if (!is_morphism(a, a, h).ok) throw InvalidMorphism("alpha_h: not an endomorphism of " + a.name());
  const std::size_t n = a.gens();
  Vector<F> v(n * n, a.field().zero());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) v[k * n + i] = h(k, i);
  return v;
}

template <ExactField F>
struct SquareCheck {
  bool zero;
  Vector<F> value;  // alpha_h^2 in A_2 (x) (A^!)_2, index p * dim(A^!_2) + q
};

/// (d_h)^2 applied to 1 (x) 1, i.e. alpha_h^2 = sum_{i,k} h(u_i)h(u_k) (x) u^i u^k.
template <ExactField F>
SquareCheck<F> dh_square_is_zero(const Presentation<F>& a, const Matrix<F>& h) {
  if (!is_morphism(a, a, h).ok)
    throw InvalidMorphism("dh_square_is_zero: not an endomorphism of " + a.name());
  const F& f = a.field();
  const std::size_t n = a.gens();
  GradedAlgebra<F> ga(a);
  GradedAlgebra<F> gd(dual(a));
  const std::size_t d2 = ga.dim(2), e2 = gd.dim(2);
  Vector<F> value(d2 * e2, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> ik{i, k};
      auto xi = gd.reduce_word(ik);
      if (is_zero_vector(f, std::span<const typename F::Element>(xi))) continue;
      Vector<F> prod(d2, f.zero());
      for (std::size_t p = 0; p < n; ++p) {
        if (f.is_zero(h(p, i))) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (f.is_zero(h(q, k))) continue;
          std::vector<std::size_t> pq{p, q};
          auto w = ga.reduce_word(pq);
          auto c = f.mul(h(p, i), h(q, k));
          for (std::size_t s = 0; s < d2; ++s)
            if (!f.is_zero(w[s])) f.add_mul(prod[s], c, w[s]);
        }
      }
      for (std::size_t s = 0; s < d2; ++s) {
        if (f.is_zero(prod[s])) continue;
        for (std::size_t t = 0; t < e2; ++t)
          if (!f.is_zero(xi[t])) f.add_mul(value[s * e2 + t], prod[s], xi[t]);
      }
    }
  bool zero = is_zero_vector(f, std::span<const typename F::Element>(value));
  return {zero, std::move(value)};
}

enum class Convention { Cochain, Chain };

/// A finite complex: differentials[k] maps position k to position k + 1 in list order.
template <ExactField F>
struct ComplexSlice {
  std::size_t internal_degree = 0;
  Convention convention = Convention::Chain;
  std::vector<std::size_t> positions;  // homological index of each list entry
  std::vector<std::size_t> position_dims;
  std::vector<Matrix<F>> differentials;
};

struct HomologyReport {
  std::size_t internal_degree = 0;
  std::vector<std::size_t> positions;
  std::vector<std::size_t> position_dims;
  std::vector<std::size_t> ranks;  // rank of each differential
  std::vector<std::size_t> homology_dims;
  bool exact = true;
};

/// Throws if shapes disagree or some composite of adjacent differentials is nonzero.
template <ExactField F>
void validate_slice(const ComplexSlice<F>& s) {
  if (s.differentials.size() + 1 != s.position_dims.size() && !s.position_dims.empty())
    throw DimensionMismatch("complex slice: differential count");
  for (std::size_t k = 0; k < s.differentials.size(); ++k) {
    const auto& d = s.differentials[k];
    if (d.cols() != s.position_dims[k] || d.rows() != s.position_dims[k + 1])
      throw DimensionMismatch("complex slice: differential shape " + d.shape());
  }
  for (std::size_t k = 0; k + 1 < s.differentials.size(); ++k)
    if (!(s.differentials[k + 1] * s.differentials[k]).is_zero())
      throw Error("complex slice in degree " + std::to_string(s.internal_degree) +
                  ": d∘d is nonzero");
}

template <ExactField F>
HomologyReport homology(const ComplexSlice<F>& s) {
  HomologyReport r;
  r.internal_degree = s.internal_degree;
  r.positions = s.positions;
  r.position_dims = s.position_dims;
  for (const auto& d : s.differentials) r.ranks.push_back(rank(d));
  for (std::size_t k = 0; k < s.position_dims.size(); ++k) {
    std::size_t out = k < r.ranks.size() ? r.ranks[k] : 0;
    std::size_t in = k > 0 ? r.ranks[k - 1] : 0;
    std::size_t h = s.position_dims[k] - out - in;
    r.homology_dims.push_back(h);
    if (h != 0) r.exact = false;
  }
  return r;
}

namespace detail {

// Matrix of sum_j L_j (x) M_j where L_j, M_j are given as dense matrices.
template <ExactField F>
Matrix<F> sum_of_krons(const F& f, const std::vector<Matrix<F>>& left,
                       const std::vector<Matrix<F>>& right, std::size_t rows, std::size_t cols) {
  Matrix<F> out(f, rows, cols);
  for (std::size_t j = 0; j < left.size(); ++j) {
    const auto& l = left[j];
    const auto& m = right[j];
    for (std::size_t a2 = 0; a2 < l.rows(); ++a2)
      for (std::size_t a = 0; a < l.cols(); ++a) {
        if (f.is_zero(l(a2, a))) continue;
        for (std::size_t b2 = 0; b2 < m.rows(); ++b2)
          for (std::size_t b = 0; b < m.cols(); ++b)
            if (!f.is_zero(m(b2, b)))
              f.add_mul(out(a2 * m.rows() + b2, a * m.cols() + b), l(a2, a), m(b2, b));
      }
  }
  return out;
}

}  // namespace detail

/// Positions i = 0..i_max carry A_{weight+i} (x) (A^!)_i; the differential is
/// left multiplication by alpha: a (x) xi |-> sum_j x_j a (x) u^j xi.
template <ExactField F>
ComplexSlice<F> first_complex_slice(GradedAlgebra<F>& a, GradedAlgebra<F>& d, std::size_t i_max,
                                    std::size_t weight = 0) {
  const F& f = a.field();
  ComplexSlice<F> s;
  s.internal_degree = weight;
  s.convention = Convention::Cochain;
  for (std::size_t i = 0; i <= i_max; ++i) {
    s.positions.push_back(i);
    s.position_dims.push_back(a.dim(weight + i) * d.dim(i));
  }
  for (std::size_t i = 0; i < i_max; ++i) {
    std::vector<Matrix<F>> left, right;
    for (std::size_t j = 0; j < a.gens(); ++j) {
      left.push_back(a.left_multiplication(weight + i, j));
      right.push_back(d.left_multiplication(i, j));
    }
    s.differentials.push_back(
        detail::sum_of_krons(f, left, right, s.position_dims[i + 1], s.position_dims[i]));
  }
  validate_slice(s);
  return s;
}

template <ExactField F>
ComplexSlice<F> first_complex_slice(const Presentation<F>& a, std::size_t i_max,
                                    std::size_t weight = 0) {
  GradedAlgebra<F> ga(a), gd(dual(a));
  return first_complex_slice(ga, gd, i_max, weight);
}

/// Positions i = m down to 0 carry A_{m-i} (x) (A^!_i)*; the differential is
/// a (x) phi |-> sum_j a x_j (x) phi(u^j . -).
template <ExactField F>
ComplexSlice<F> second_complex_slice(GradedAlgebra<F>& a, GradedAlgebra<F>& d, std::size_t m) {
  const F& f = a.field();
  ComplexSlice<F> s;
  s.internal_degree = m;
  s.convention = Convention::Chain;
  for (std::size_t k = 0; k <= m; ++k) {
    std::size_t i = m - k;
    s.positions.push_back(i);
    s.position_dims.push_back(a.dim(m - i) * d.dim(i));
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t i = m - k;
    // entry ((a', g), (a, b)) = sum_j [R_j]_{a', a} [L_j]_{b, g}
    std::vector<Matrix<F>> left, right;
    for (std::size_t j = 0; j < a.gens(); ++j) {
      left.push_back(a.right_multiplication(m - i, j));
      right.push_back(d.left_multiplication(i - 1, j).transpose());
    }
    s.differentials.push_back(
        detail::sum_of_krons(f, left, right, s.position_dims[k + 1], s.position_dims[k]));
  }
  validate_slice(s);
  return s;
}

template <ExactField F>
ComplexSlice<F> second_complex_slice(const Presentation<F>& a, std::size_t m) {
  GradedAlgebra<F> ga(a), gd(dual(a));
  return second_complex_slice(ga, gd, m);
}

struct EulerLine {
  std::size_t degree;
  long long value;  // sum_i (-1)^i dim A_{m-i} dim A^!_i, as an integer
  bool ok;
};

struct KoszulVerdict {
  std::vector<HomologyReport> reports;  // m = 1..N
  std::vector<EulerLine> euler;         // m = 1..N
  bool koszul = true;
  bool euler_ok = true;
};

template <ExactField F>
std::vector<EulerLine> euler_hilbert_lines(GradedAlgebra<F>& a, GradedAlgebra<F>& d,
                                           std::size_t n_max) {
  std::vector<EulerLine> lines;
  for (std::size_t m = 1; m <= n_max; ++m) {
    long long v = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      auto term = static_cast<long long>(a.dim(m - i) * d.dim(i));
      v += (i % 2 == 0) ? term : -term;
    }
    lines.push_back({m, v, v == 0});
  }
  return lines;
}

/// One flag per degree 1..N.
template <ExactField F>
std::vector<bool> euler_hilbert_test(const Presentation<F>& a, std::size_t n_max) {
  GradedAlgebra<F> ga(a), gd(dual(a));
  std::vector<bool> out;
  for (const auto& l : euler_hilbert_lines(ga, gd, n_max)) out.push_back(l.ok);
  return out;
}

template <ExactField F>
bool euler_hilbert_holds(const Presentation<F>& a, std::size_t n_max) {
  for (bool b : euler_hilbert_test(a, n_max))
    if (!b) return false;
  return true;
}

template <ExactField F>
KoszulVerdict koszul_verdict(GradedAlgebra<F>& a, GradedAlgebra<F>& d, std::size_t n_max) {
  KoszulVerdict v;
  for (std::size_t m = 1; m <= n_max; ++m) {
    v.reports.push_back(homology(second_complex_slice(a, d, m)));
    if (!v.reports.back().exact) v.koszul = false;
  }
  v.euler = euler_hilbert_lines(a, d, n_max);
  for (const auto& l : v.euler)
    if (!l.ok) v.euler_ok = false;
  return v;
}

template <ExactField F>
KoszulVerdict koszul_verdict(const Presentation<F>& a, std::size_t n_max) {
  GradedAlgebra<F> ga(a), gd(dual(a));
  return koszul_verdict(ga, gd, n_max);
}

/// entries[m][p] = dim of bar homology in homological degree p, internal degree m (p <= m).
struct BidegreeTable {
  std::size_t m_max = 0;
  std::vector<std::vector<std::size_t>> entries;

  std::size_t at(std::size_t p, std::size_t m) const {
    if (m >= entries.size() || p >= entries[m].size()) return 0;
    return entries[m][p];
  }
};

namespace detail {

inline void compositions_into(std::size_t m, std::size_t parts, std::vector<std::size_t>& cur,
                              std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (m == 0) out.push_back(cur);
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= m; ++first) {
    cur.push_back(first);
    compositions_into(m - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Compositions of m into exactly p positive parts, lexicographic.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t m, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  compositions_into(m, p, cur, out);
  return out;
}

struct BarPosition {
  std::vector<std::vector<std::size_t>> blocks;
  std::map<std::vector<std::size_t>, std::size_t> offset;
  std::size_t dim = 0;
};

template <ExactField F>
BarPosition bar_position(GradedAlgebra<F>& a, std::size_t m, std::size_t p) {
  BarPosition pos;
  for (auto& c : compositions(m, p)) {
    std::size_t d = 1;
    for (auto part : c) d *= a.dim(part);
    if (d == 0) continue;
    pos.offset[c] = pos.dim;
    pos.dim += d;
    pos.blocks.push_back(std::move(c));
  }
  return pos;
}

// d : B_p -> B_{p-1} in internal degree m.
template <ExactField F>
Matrix<F> bar_differential(GradedAlgebra<F>& a, const BarPosition& src, const BarPosition& dst) {
  const F& f = a.field();
  Matrix<F> d(f, dst.dim, src.dim);
  for (const auto& block : src.blocks) {
    const std::size_t p = block.size();
    std::vector<std::size_t> dims;
    for (auto part : block) dims.push_back(a.dim(part));
    std::size_t count = 1;
    for (auto x : dims) count *= x;
    const std::size_t base = src.offset.at(block);
    std::vector<std::size_t> idx(p, 0);
    for (std::size_t flat = 0; flat < count; ++flat) {
      // idx is the mixed-radix decomposition of flat
      for (std::size_t i = 0; i + 1 < p; ++i) {
        std::vector<std::size_t> merged;
        for (std::size_t k = 0; k < p; ++k) {
          if (k == i) {
            merged.push_back(block[i] + block[i + 1]);
            ++k;
          } else {
            merged.push_back(block[k]);
          }
        }
        auto it = dst.offset.find(merged);
        if (it == dst.offset.end()) continue;
        const auto& prod = a.product(block[i], idx[i], block[i + 1], idx[i + 1]);
        if (prod.empty()) continue;
        // position of the other letters in the merged block
        std::size_t prefix = 0, suffix = 0, suffix_size = 1;
        for (std::size_t k = 0; k < i; ++k) prefix = prefix * dims[k] + idx[k];
        for (std::size_t k = i + 2; k < p; ++k) {
          suffix = suffix * dims[k] + idx[k];
          suffix_size *= dims[k];
        }
        const std::size_t mid = a.dim(block[i] + block[i + 1]);
        auto sign = (i + 1) % 2 == 0 ? f.one() : f.neg(f.one());
        for (const auto& [k, c] : prod) {
          std::size_t row = it->second + (prefix * mid + k) * suffix_size + suffix;
          f.add_mul(d(row, base + flat), sign, c);
        }
      }
      for (std::size_t k = p; k-- > 0;) {
        if (++idx[k] < dims[k]) break;
        idx[k] = 0;
      }
    }
  }
  return d;
}

}  // namespace detail

/// Homology dims of the reduced bar complex in internal degree m, p = 0..m.
template <ExactField F>
std::vector<std::size_t> bar_homology_in_degree(GradedAlgebra<F>& a, std::size_t m) {
  if (m == 0) return {1};
  std::vector<detail::BarPosition> pos(m + 2);
  for (std::size_t p = 1; p <= m; ++p) pos[p] = detail::bar_position(a, m, p);
  // ranks[p] = rank of d : B_p -> B_{p-1}; d out of B_1 lands in B_0 = 0 for m >= 1.
  std::vector<std::size_t> ranks(m + 2, 0);
  for (std::size_t p = 2; p <= m; ++p)
    if (pos[p].dim > 0 && pos[p - 1].dim > 0)
      ranks[p] = rank(detail::bar_differential(a, pos[p], pos[p - 1]));
  std::vector<std::size_t> h(m + 1, 0);
  for (std::size_t p = 1; p <= m; ++p) h[p] = pos[p].dim - ranks[p] - ranks[p + 1];
  return h;
}

template <ExactField F>
BidegreeTable bar_homology(GradedAlgebra<F>& a, std::size_t m_max) {
  BidegreeTable t;
  t.m_max = m_max;
  for (std::size_t m = 0; m <= m_max; ++m) t.entries.push_back(bar_homology_in_degree(a, m));
  return t;
}

template <ExactField F>
BidegreeTable bar_homology(const Presentation<F>& a, std::size_t m_max) {
  GradedAlgebra<F> ga(a);
  return bar_homology(ga, m_max);
}

struct ExtCheck {
  bool ok = true;
  BidegreeTable table;           // degrees computed so far
  std::size_t first_failure = 0;  // internal degree of the first failure, 0 if none
};

struct EulerSearchResult {
  std::optional<Presentation<PrimeField>> found;
  std::size_t candidates = 0;  // presentations examined, including the find
};

/// Deterministic search for the first presentation over GF(p) on n generators
/// whose Hilbert series fail the Euler identity up to degree max_degree.
/// Relation spaces are visited as reduced row-echelon matrices: by dimension
/// ascending, then pivot columns in lexicographic order, then the free entries
/// read as a base-p counter whose least significant digit is the first free
/// position (row-major). Returns nothing if no candidate fails.
inline EulerSearchResult search_euler_failure(const PrimeField& f, std::size_t n,
                                              std::size_t max_degree,
                                              std::size_t max_candidates = 1000000) {
  const std::size_t cols = n * n;
  const std::uint32_t p = f.modulus();
  EulerSearchResult res;
  for (std::size_t d = 1; d <= cols; ++d) {
    std::vector<std::size_t> piv(d);
    for (std::size_t i = 0; i < d; ++i) piv[i] = i;
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> free_cells;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = piv[i] + 1; c < cols; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cells.emplace_back(i, c);
      std::vector<std::uint32_t> digits(free_cells.size(), 0);
      for (;;) {
        if (res.candidates >= max_candidates) return res;
        Matrix<PrimeField> m(f, d, cols);
        for (std::size_t i = 0; i < d; ++i) m(i, piv[i]) = f.one();
        for (std::size_t k = 0; k < free_cells.size(); ++k)
          m(free_cells[k].first, free_cells[k].second) = digits[k];
        Presentation<PrimeField> a(f, "gf" + std::to_string(p) + "_nonkoszul",
                                   indexed_labels("x", n), Subspace<PrimeField>::span(m));
        ++res.candidates;
        if (!euler_hilbert_holds(a, max_degree)) {
          res.found = std::move(a);
          return res;
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
        if (k == digits.size()) break;
      }
      std::size_t i = d;
      while (i > 0 && piv[i - 1] == cols - d + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return res;
}

/// Bar homology concentrated on the diagonal with entry(p, p) = dim (A^!)_p, for m <= m_max.
/// Stops at the first failing internal degree.
template <ExactField F>
ExtCheck ext_diagonal_check(GradedAlgebra<F>& a, GradedAlgebra<F>& d, std::size_t m_max) {
  ExtCheck c;
  for (std::size_t m = 0; m <= m_max; ++m) {
    auto row = bar_homology_in_degree(a, m);
    c.table.entries.push_back(row);
    c.table.m_max = m;
    bool good = true;
    for (std::size_t p = 0; p <= m; ++p) {
      std::size_t expected = p == m ? d.dim(m) : 0;
      if (row[p] != expected) good = false;
    }
    if (!good) {
      c.ok = false;
      c.first_failure = m;
      break;
    }
  }
  return c;
}

template <ExactField F>
ExtCheck ext_diagonal_check(const Presentation<F>& a, std::size_t m_max) {
  GradedAlgebra<F> ga(a), gd(dual(a));
  return ext_diagonal_check(ga, gd, m_max);
}

}  // namespace qcat
