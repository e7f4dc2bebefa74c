#pragma once

/**
 * @file presentation.hpp
 * @brief Quadratic presentations T(V)/(R), their morphisms, Manin's black and
 * white products, quadratic duality and the units.
 *
 * Generators of a product U (x) V are the pairs (a, b) in row-major order,
 * labelled "a⊗b". The relation space of a product is pushed through t23 so
 * that it lives in (U1 (x) V1)^(x)2.
 */

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/field.hpp"
#include "qcat/linalg.hpp"
#include "qcat/matrix.hpp"
#include "qcat/tensor.hpp"

namespace qcat {

inline constexpr const char* kTensorSeparator = "⊗";

template <ExactField F>
class Presentation {
 public:
  Presentation(F field, std::string name, std::vector<std::string> labels, Subspace<F> relations)
      : field_(std::move(field)),
        name_(std::move(name)),
        labels_(std::move(labels)),
        relations_(std::move(relations)) {
    require_same_field(field_, relations_.field());
    if (relations_.ambient_dim() != labels_.size() * labels_.size())
      throw DimensionMismatch("relation space must live in V (x) V");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw Error("generator labels must be nonempty");
      if (!seen.insert(l).second) throw Error("duplicate generator label '" + l + "'");
    }
  }

  const F& field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t gens() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Subspace<F>& relations() const { return relations_; }

  Presentation renamed(std::string name) const {
    Presentation p = *this;
    p.name_ = std::move(name);
    return p;
  }

  /// Same generator count and relation space; labels and names are ignored.
  bool same_algebra(const Presentation& other) const {
    return field_ == other.field_ && gens() == other.gens() && relations_ == other.relations_;
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.field_ == b.field_ && a.name_ == b.name_ && a.labels_ == b.labels_ &&
           a.relations_ == b.relations_;
  }

 private:
  F field_;
  std::string name_;
  std::vector<std::string> labels_;
  Subspace<F> relations_;
};

inline std::vector<std::string> indexed_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(stem + std::to_string(i));
  return labels;
}

template <ExactField F>
Presentation<F> free_algebra(const F& field, std::size_t n, std::string name = "") {
  if (name.empty()) name = "free" + std::to_string(n);
  return {field, std::move(name), indexed_labels("x", n), Subspace<F>::zero(field, n * n)};
}

/// The vector space F^d as a quadratic algebra with zero product (R = V (x) V).
template <ExactField F>
Presentation<F> embed_vector_space(const F& field, std::size_t d) {
  return {field, "embed" + std::to_string(d), indexed_labels("e", d),
          Subspace<F>::full(field, d * d)};
}

/// Unit of the white product: T(F), one generator, no relations.
template <ExactField F>
Presentation<F> unit_white(const F& field) {
  return {field, "I_white", {"t"}, Subspace<F>::zero(field, 1)};
}

/// Unit of the black product: one generator t with t*t = 0.
template <ExactField F>
Presentation<F> unit_black(const F& field) {
  return {field, "I_black", {"t"}, Subspace<F>::full(field, 1)};
}

namespace detail {

inline std::string toggle_suffix(const std::string& s, char c) {
  if (!s.empty() && s.back() == c) return s.substr(0, s.size() - 1);
  return s + c;
}

inline std::vector<std::string> product_labels(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) labels.push_back(x + kTensorSeparator + y);
  return labels;
}

}  // namespace detail

/// Quadratic dual: generators V*, relations the annihilator of R.
/// Labels and the name toggle a trailing '!' so that dual(dual(A)) == A.
template <ExactField F>
Presentation<F> dual(const Presentation<F>& a) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(detail::toggle_suffix(l, '!'));
  return {a.field(), detail::toggle_suffix(a.name(), '!'), std::move(labels),
          annihilator(a.relations())};
}

template <ExactField F>
Presentation<F> black(const Presentation<F>& a, const Presentation<F>& b) {
  require_same_field(a.field(), b.field());
  const std::size_t n = a.gens() * b.gens();
  std::string name = "(" + a.name() + "•" + b.name() + ")";
  if (n == 0) return {a.field(), name, {}, Subspace<F>::zero(a.field(), 0)};
  auto r = push_subspace(t23(a.gens(), b.gens()), tensor_subspace(a.relations(), b.relations()));
  return {a.field(), std::move(name), detail::product_labels(a.labels(), b.labels()), std::move(r)};
}

template <ExactField F>
Presentation<F> white(const Presentation<F>& a, const Presentation<F>& b) {
  require_same_field(a.field(), b.field());
  const F& f = a.field();
  const std::size_t na = a.gens(), nb = b.gens(), n = na * nb;
  std::string name = "(" + a.name() + "∘" + b.name() + ")";
  if (n == 0) return {f, name, {}, Subspace<F>::zero(f, 0)};
  auto left = tensor_subspace(Subspace<F>::full(f, na * na), b.relations());
  auto right = tensor_subspace(a.relations(), Subspace<F>::full(f, nb * nb));
  auto r = push_subspace(t23(na, nb), sum(left, right));
  return {f, std::move(name), detail::product_labels(a.labels(), b.labels()), std::move(r)};
}

/// Internal Hom from U to V for the black product: V ∘ U^!.
template <ExactField F>
Presentation<F> internal_hom(const Presentation<F>& u, const Presentation<F>& v) {
  return white(v, dual(u)).renamed("Hom(" + u.name() + "," + v.name() + ")");
}

/// Outcome of the relation-containment test for a degree-1 matrix.
template <ExactField F>
struct MorphismCheck {
  bool ok;
  Subspace<F> image;          // (M (x) M)(R_src)
  Vector<F> residual;         // nonzero witness when !ok, empty otherwise
};

template <ExactField F>
MorphismCheck<F> is_morphism(const Presentation<F>& src, const Presentation<F>& dst,
                             const Matrix<F>& m) {
  require_same_field(src.field(), dst.field());
  require_same_field(src.field(), m.field());
  if (m.rows() != dst.gens() || m.cols() != src.gens())
    throw DimensionMismatch("morphism matrix must be " + std::to_string(dst.gens()) + "x" +
                            std::to_string(src.gens()) + ", got " + m.shape());
  if (m.is_identity()) {
    // (Id (x) Id)(R_src) = R_src; no push needed
    const auto& r = src.relations();
    if (r == dst.relations() || dst.relations().is_full()) return {true, r, {}};
    for (std::size_t i = 0; i < r.dim(); ++i) {
      auto res = dst.relations().residual(r.row(i));
      if (!is_zero_vector(m.field(), std::span<const typename F::Element>(res)))
        return {false, r, std::move(res)};
    }
    return {true, r, {}};
  }
  auto image = push_tensor_square(m, src.relations());
  if (dst.relations().is_full()) return {true, std::move(image), {}};
  for (std::size_t i = 0; i < image.dim(); ++i) {
    auto res = dst.relations().residual(image.row(i));
    if (!is_zero_vector(m.field(), std::span<const typename F::Element>(res)))
      return {false, std::move(image), std::move(res)};
  }
  return {true, std::move(image), {}};
}

/// A verified algebra map determined by its degree-1 matrix (dst.gens x src.gens).
template <ExactField F>
class Morphism {
 public:
  /// Validates the relation containment; throws InvalidMorphism otherwise.
  Morphism(Presentation<F> src, Presentation<F> dst, Matrix<F> m)
      : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(m)),
        certificate_(Subspace<F>::zero(src_.field(), 0)) {
    auto check = is_morphism(src_, dst_, matrix_);
    if (!check.ok)
      throw InvalidMorphism("matrix is not a morphism " + src_.name() + " -> " + dst_.name());
    certificate_ = std::move(check.image);
  }

  static Morphism identity(const Presentation<F>& a) {
    return Morphism(a, a, Matrix<F>::identity(a.field(), a.gens()));
  }

  const Presentation<F>& src() const { return src_; }
  const Presentation<F>& dst() const { return dst_; }
  const Matrix<F>& matrix() const { return matrix_; }
  /// (M (x) M)(R_src), known to lie inside R_dst.
  const Subspace<F>& certificate() const { return certificate_; }

 private:
  Presentation<F> src_;
  Presentation<F> dst_;
  Matrix<F> matrix_;
  Subspace<F> certificate_;
};

/// g after f.
template <ExactField F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
  if (!f.dst().same_algebra(g.src())) throw InvalidMorphism("compose: endpoints do not match");
  return Morphism<F>(f.src(), g.dst(), g.matrix() * f.matrix());
}

/// h^! : dst^! -> src^!, matrix the transpose of h.
template <ExactField F>
Morphism<F> dual_morphism(const Morphism<F>& h) {
  return Morphism<F>(dual(h.dst()), dual(h.src()), h.matrix().transpose());
}

template <ExactField F>
Morphism<F> black_of(const Morphism<F>& f, const Morphism<F>& g) {
  return Morphism<F>(black(f.src(), g.src()), black(f.dst(), g.dst()),
                     kron(f.matrix(), g.matrix()));
}

template <ExactField F>
Morphism<F> white_of(const Morphism<F>& f, const Morphism<F>& g) {
  return Morphism<F>(white(f.src(), g.src()), white(f.dst(), g.dst()),
                     kron(f.matrix(), g.matrix()));
}

/// sum_i u_i (x) u^i in the generator space of A ∘ A^!.
template <ExactField F>
Vector<F> canonical_element(const Presentation<F>& a) {
  const std::size_t n = a.gens();
  Vector<F> v(n * n, a.field().zero());
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = a.field().one();
  return v;
}

/// Row vector of the pairing V* (x) V -> F in the generator order of A^! • A.
template <ExactField F>
Matrix<F> evaluation_matrix(const Presentation<F>& a) {
  return Matrix<F>::row_vector(a.field(), canonical_element(a));
}

}  // namespace qcat
