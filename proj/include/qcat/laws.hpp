#pragma once

/**
 * @file laws.hpp
 * @brief Checks of the quadratic-category structure on concrete algebras.
 *
 * A structure map is an Arrow: source, target and a degree-1 matrix. A Path
 * composes arrows left to right and validates every step with is_morphism
 * before multiplying, so a diagram can only pass if all of its maps exist.
 * Two paths are compared entrywise; the residual is left minus right.
 *
 * Degree-1 conventions: generators of a product are pairs in row-major
 * order, so the associators f, h, c_• and c_∘ and all unitors are identity
 * matrices. Their content is that the identity is a morphism between the
 * two presentations, which is what the path validation checks.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/linalg.hpp"
#include "qcat/presentation.hpp"
#include "qcat/tensor.hpp"

namespace qcat {

template <ExactField F>
struct Arrow {
  std::string name;
  Presentation<F> src;
  Presentation<F> dst;
  Matrix<F> matrix;
};

template <ExactField F>
Arrow<F> as_arrow(std::string name, const Morphism<F>& m) {
  return {std::move(name), m.src(), m.dst(), m.matrix()};
}

template <ExactField F>
Morphism<F> to_morphism(const Arrow<F>& a) {
  return Morphism<F>(a.src, a.dst, a.matrix);
}

template <ExactField F>
Arrow<F> identity_arrow(const Presentation<F>& a) {
  return {"Id_" + a.name(), a, a, Matrix<F>::identity(a.field(), a.gens())};
}

/// The identity matrix read as a map between two presentations on the same generator count.
template <ExactField F>
Arrow<F> reshape_arrow(std::string name, const Presentation<F>& src, const Presentation<F>& dst) {
  if (src.gens() != dst.gens()) throw DimensionMismatch(name + ": generator counts differ");
  return {std::move(name), src, dst, Matrix<F>::identity(src.field(), src.gens())};
}

template <ExactField F>
Arrow<F> black_arrow(const Arrow<F>& f, const Arrow<F>& g) {
  return {"(" + f.name + "•" + g.name + ")", black(f.src, g.src), black(f.dst, g.dst),
          kron(f.matrix, g.matrix)};
}

template <ExactField F>
Arrow<F> white_arrow(const Arrow<F>& f, const Arrow<F>& g) {
  return {"(" + f.name + "∘" + g.name + ")", white(f.src, g.src), white(f.dst, g.dst),
          kron(f.matrix, g.matrix)};
}

/// f_{U1,U2,U3} : (U1∘U2)•U3 -> U1∘(U2•U3).
template <ExactField F>
Arrow<F> arrow_f(const Presentation<F>& u1, const Presentation<F>& u2, const Presentation<F>& u3) {
  return reshape_arrow("f", black(white(u1, u2), u3), white(u1, black(u2, u3)));
}

/// h_{U1,U2,U3} : U1•(U2∘U3) -> (U1•U2)∘U3.
template <ExactField F>
Arrow<F> arrow_h(const Presentation<F>& u1, const Presentation<F>& u2, const Presentation<F>& u3) {
  return reshape_arrow("h", black(u1, white(u2, u3)), white(black(u1, u2), u3));
}

template <ExactField F>
Arrow<F> arrow_assoc_black(const Presentation<F>& u1, const Presentation<F>& u2,
                           const Presentation<F>& u3) {
  return reshape_arrow("c_•", black(black(u1, u2), u3), black(u1, black(u2, u3)));
}

template <ExactField F>
Arrow<F> arrow_assoc_white(const Presentation<F>& u1, const Presentation<F>& u2,
                           const Presentation<F>& u3) {
  return reshape_arrow("c_∘", white(white(u1, u2), u3), white(u1, white(u2, u3)));
}

/// c_U : I_• -> U∘U^!, 1 |-> sum_i u_i (x) u^i.
template <ExactField F>
Arrow<F> arrow_c(const Presentation<F>& u) {
  return {"c_" + u.name(), unit_black(u.field()), white(u, dual(u)),
          Matrix<F>::column(u.field(), canonical_element(u))};
}

/// d_U : U^!•U -> I_∘, the pairing u^i (x) u_j |-> delta_ij.
template <ExactField F>
Arrow<F> arrow_d(const Presentation<F>& u) {
  return {"d_" + u.name(), black(dual(u), u), unit_white(u.field()), evaluation_matrix(u)};
}

template <ExactField F>
Arrow<F> arrow_braid_black(const Presentation<F>& u, const Presentation<F>& v) {
  return {"c'_•", black(u, v), black(v, u), flip(u.gens(), v.gens()).matrix(u.field())};
}

template <ExactField F>
Arrow<F> arrow_braid_white(const Presentation<F>& u, const Presentation<F>& v) {
  return {"c'_∘", white(u, v), white(v, u), flip(u.gens(), v.gens()).matrix(u.field())};
}

/// The unitors and their inverses; all identity matrices.
template <ExactField F>
Arrow<F> unitor_black_left(const Presentation<F>& u) {
  return reshape_arrow("λ_•", black(unit_black(u.field()), u), u);
}
template <ExactField F>
Arrow<F> unitor_black_right(const Presentation<F>& u) {
  return reshape_arrow("ρ_•", black(u, unit_black(u.field())), u);
}
template <ExactField F>
Arrow<F> unitor_white_left(const Presentation<F>& u) {
  return reshape_arrow("λ_∘", white(unit_white(u.field()), u), u);
}
template <ExactField F>
Arrow<F> unitor_white_right(const Presentation<F>& u) {
  return reshape_arrow("ρ_∘", white(u, unit_white(u.field())), u);
}

/// The arrow read backwards; the matrix must be invertible.
template <ExactField F>
Arrow<F> reversed(const Arrow<F>& a) {
  auto inv = inverse(a.matrix);
  if (!inv) throw InvalidMorphism(a.name + " is not invertible");
  return {a.name + "⁻¹", a.dst, a.src, std::move(*inv)};
}

/// Validated composite of arrows, applied left to right.
template <ExactField F>
class Path {
 public:
  explicit Path(const Presentation<F>& start)
      : current_(start), composite_(Matrix<F>::identity(start.field(), start.gens())) {}

  Path& then(const Arrow<F>& a) {
    if (!valid_) return *this;
    if (!a.src.same_algebra(current_)) {
      fail("step " + a.name + " does not start at " + current_.name());
      return *this;
    }
    if (!is_morphism(a.src, a.dst, a.matrix).ok) {
      fail("step " + a.name + " is not a morphism " + a.src.name() + " -> " + a.dst.name());
      return *this;
    }
    composite_ = a.matrix * composite_;
    current_ = a.dst;
    steps_.push_back(a.name);
    return *this;
  }

  bool valid() const { return valid_; }
  const std::string& failure() const { return failure_; }
  const Matrix<F>& matrix() const { return composite_; }
  const Presentation<F>& target() const { return current_; }
  const std::vector<std::string>& steps() const { return steps_; }

  Arrow<F> as_arrow(std::string name, const Presentation<F>& start) const {
    return {std::move(name), start, current_, composite_};
  }

 private:
  void fail(std::string why) {
    valid_ = false;
    failure_ = std::move(why);
  }

  Presentation<F> current_;
  Matrix<F> composite_;
  bool valid_ = true;
  std::string failure_;
  std::vector<std::string> steps_;
};

template <ExactField F>
struct DiagramCheck {
  std::string name;
  std::vector<std::string> objects;
  bool passed = false;
  Matrix<F> residual;
  std::string note;
  bool informational = false;  // measured and reported, never counted as a failure
};

template <ExactField F>
std::string objects_label(const DiagramCheck<F>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.objects.size(); ++i) s += (i ? "," : "") + c.objects[i];
  return s;
}

template <ExactField F>
void sort_checks(std::vector<DiagramCheck<F>>& checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) {
    if (a.name != b.name) return a.name < b.name;
    return objects_label(a) < objects_label(b);
  });
}

namespace detail {

template <ExactField F>
std::vector<std::string> names_of(std::initializer_list<const Presentation<F>*> ps) {
  std::vector<std::string> out;
  for (auto* p : ps) out.push_back(p->name());
  return out;
}

template <ExactField F>
Matrix<F> one_by_one(const F& f, bool one) {
  Matrix<F> m(f, 1, 1);
  if (one) m(0, 0) = f.one();
  return m;
}

}  // namespace detail

template <ExactField F>
DiagramCheck<F> compare_paths(std::string name, std::vector<std::string> objects,
                              const Path<F>& left, const Path<F>& right) {
  const F& f = left.matrix().field();
  DiagramCheck<F> c{std::move(name), std::move(objects), false, detail::one_by_one(f, true), "",
                    false};
  if (!left.valid()) {
    c.note = "left path: " + left.failure();
    return c;
  }
  if (!right.valid()) {
    c.note = "right path: " + right.failure();
    return c;
  }
  if (!left.target().same_algebra(right.target())) {
    c.note = "paths end at different algebras";
    return c;
  }
  if (left.matrix().rows() != right.matrix().rows() ||
      left.matrix().cols() != right.matrix().cols()) {
    c.note = "composite shapes differ: " + left.matrix().shape() + " vs " + right.matrix().shape();
    return c;
  }
  c.residual = left.matrix() - right.matrix();
  c.passed = c.residual.is_zero();
  if (!c.passed) c.note = "composites differ";
  return c;
}

/// A single arrow that must be a morphism.
template <ExactField F>
DiagramCheck<F> validity_check(std::string name, std::vector<std::string> objects,
                               const Arrow<F>& a) {
  const F& f = a.src.field();
  auto check = is_morphism(a.src, a.dst, a.matrix);
  DiagramCheck<F> c{std::move(name), std::move(objects), check.ok, detail::one_by_one(f, false),
                    "", false};
  if (!check.ok) {
    c.residual = Matrix<F>::row_vector(f, check.residual);
    c.note = a.name + " maps a relation outside the target relations";
  }
  return c;
}

template <ExactField F>
Morphism<F> structure_map_f(const Presentation<F>& u1, const Presentation<F>& u2,
                            const Presentation<F>& u3) {
  return to_morphism(arrow_f(u1, u2, u3));
}

template <ExactField F>
Morphism<F> structure_map_h(const Presentation<F>& u1, const Presentation<F>& u2,
                            const Presentation<F>& u3) {
  return to_morphism(arrow_h(u1, u2, u3));
}

// ---------------------------------------------------------------------------
// The axiom diagrams

/// (U1•(U2∘U3))•U4: c_• then Id•f then h, against h•Id then f.
template <ExactField F>
DiagramCheck<F> check_mixed_associativity_black(const Presentation<F>& u1,
                                                const Presentation<F>& u2,
                                                const Presentation<F>& u3,
                                                const Presentation<F>& u4) {
  auto w23 = white(u2, u3);
  auto start = black(black(u1, w23), u4);
  Path<F> left(start);
  left.then(arrow_assoc_black(u1, w23, u4))
      .then(black_arrow(identity_arrow(u1), arrow_f(u2, u3, u4)))
      .then(arrow_h(u1, u2, black(u3, u4)));
  Path<F> right(start);
  right.then(black_arrow(arrow_h(u1, u2, u3), identity_arrow(u4)))
      .then(arrow_f(black(u1, u2), u3, u4));
  return compare_paths("mixed-associativity-black", detail::names_of<F>({&u1, &u2, &u3, &u4}),
                       left, right);
}

/// (U1∘U2)•(U3∘U4): f then Id∘h, against h then f∘Id then c_∘.
template <ExactField F>
DiagramCheck<F> check_mixed_associativity_white(const Presentation<F>& u1,
                                                const Presentation<F>& u2,
                                                const Presentation<F>& u3,
                                                const Presentation<F>& u4) {
  auto start = black(white(u1, u2), white(u3, u4));
  Path<F> left(start);
  left.then(arrow_f(u1, u2, white(u3, u4)))
      .then(white_arrow(identity_arrow(u1), arrow_h(u2, u3, u4)));
  Path<F> right(start);
  right.then(arrow_h(white(u1, u2), u3, u4))
      .then(white_arrow(arrow_f(u1, u2, u3), identity_arrow(u4)))
      .then(arrow_assoc_white(u1, black(u2, u3), u4));
  return compare_paths("mixed-associativity-white", detail::names_of<F>({&u1, &u2, &u3, &u4}),
                       left, right);
}

/// I_•••U -> (U∘U^!)•U -> U∘(U^!•U) -> U∘I_∘ -> U equals the unitor.
template <ExactField F>
DiagramCheck<F> check_zigzag_left(const Presentation<F>& u) {
  auto start = black(unit_black(u.field()), u);
  Path<F> left(start);
  left.then(black_arrow(arrow_c(u), identity_arrow(u)))
      .then(arrow_f(u, dual(u), u))
      .then(white_arrow(identity_arrow(u), arrow_d(u)))
      .then(unitor_white_right(u));
  Path<F> right(start);
  right.then(unitor_black_left(u));
  return compare_paths("zigzag-left", {u.name()}, left, right);
}

/// U^!•I_• -> U^!•(U∘U^!) -> (U^!•U)∘U^! -> I_∘∘U^! -> U^! equals the unitor.
template <ExactField F>
DiagramCheck<F> check_zigzag_right(const Presentation<F>& u) {
  auto ud = dual(u);
  auto start = black(ud, unit_black(u.field()));
  Path<F> left(start);
  left.then(black_arrow(identity_arrow(ud), arrow_c(u)))
      .then(arrow_h(ud, u, ud))
      .then(white_arrow(arrow_d(u), identity_arrow(ud)))
      .then(unitor_white_left(ud));
  Path<F> right(start);
  right.then(unitor_black_right(ud));
  return compare_paths("zigzag-right", {u.name()}, left, right);
}

/// h is natural: h' ∘ (u1•(u2∘u3)) = ((u1•u2)∘u3) ∘ h.
template <ExactField F>
DiagramCheck<F> check_naturality_h(const Morphism<F>& u1, const Morphism<F>& u2,
                                   const Morphism<F>& u3) {
  auto a1 = as_arrow("u1", u1), a2 = as_arrow("u2", u2), a3 = as_arrow("u3", u3);
  auto start = black(u1.src(), white(u2.src(), u3.src()));
  Path<F> left(start);
  left.then(black_arrow(a1, white_arrow(a2, a3))).then(arrow_h(u1.dst(), u2.dst(), u3.dst()));
  Path<F> right(start);
  right.then(arrow_h(u1.src(), u2.src(), u3.src())).then(white_arrow(black_arrow(a1, a2), a3));
  return compare_paths("naturality-h",
                       {u1.src().name(), u2.src().name(), u3.src().name(), u1.dst().name(),
                        u2.dst().name(), u3.dst().name()},
                       left, right);
}

/// f is natural: f' ∘ ((u1∘u2)•u3) = (u1∘(u2•u3)) ∘ f.
template <ExactField F>
DiagramCheck<F> check_naturality_f(const Morphism<F>& u1, const Morphism<F>& u2,
                                   const Morphism<F>& u3) {
  auto a1 = as_arrow("u1", u1), a2 = as_arrow("u2", u2), a3 = as_arrow("u3", u3);
  auto start = black(white(u1.src(), u2.src()), u3.src());
  Path<F> left(start);
  left.then(black_arrow(white_arrow(a1, a2), a3)).then(arrow_f(u1.dst(), u2.dst(), u3.dst()));
  Path<F> right(start);
  right.then(arrow_f(u1.src(), u2.src(), u3.src())).then(white_arrow(a1, black_arrow(a2, a3)));
  return compare_paths("naturality-f",
                       {u1.src().name(), u2.src().name(), u3.src().name(), u1.dst().name(),
                        u2.dst().name(), u3.dst().name()},
                       left, right);
}

/// All six axiom diagrams; naturality uses the given morphisms or identities.
template <ExactField F>
std::vector<DiagramCheck<F>> check_axiom_diagrams(
    const Presentation<F>& u1, const Presentation<F>& u2, const Presentation<F>& u3,
    const Presentation<F>& u4, const std::optional<Morphism<F>>& m1 = std::nullopt,
    const std::optional<Morphism<F>>& m2 = std::nullopt,
    const std::optional<Morphism<F>>& m3 = std::nullopt) {
  auto n1 = m1 ? *m1 : Morphism<F>::identity(u1);
  auto n2 = m2 ? *m2 : Morphism<F>::identity(u2);
  auto n3 = m3 ? *m3 : Morphism<F>::identity(u3);
  std::vector<DiagramCheck<F>> out;
  out.push_back(check_mixed_associativity_black(u1, u2, u3, u4));
  out.push_back(check_mixed_associativity_white(u1, u2, u3, u4));
  out.push_back(check_zigzag_left(u1));
  out.push_back(check_zigzag_right(u1));
  out.push_back(check_naturality_h(n1, n2, n3));
  out.push_back(check_naturality_f(n1, n2, n3));
  return out;
}

// ---------------------------------------------------------------------------
// Internal Hom adjunction

/// u : U•L -> N  gives  u' : U -> N∘L^!.
template <ExactField F>
Path<F> curry_path(const Presentation<F>& u, const Presentation<F>& l, const Arrow<F>& arr) {
  Path<F> p(u);
  p.then(reversed(unitor_black_right(u)))
      .then(black_arrow(identity_arrow(u), arrow_c(l)))
      .then(arrow_h(u, l, dual(l)))
      .then(white_arrow(arr, identity_arrow(dual(l))));
  return p;
}

/// v : U -> N∘L^!  gives  v'' : U•L -> N.
template <ExactField F>
Path<F> uncurry_path(const Presentation<F>& l, const Presentation<F>& n, const Arrow<F>& arr) {
  Path<F> p(black(arr.src, l));
  p.then(black_arrow(arr, identity_arrow(l)))
      .then(arrow_f(n, dual(l), l))
      .then(white_arrow(identity_arrow(n), arrow_d(l)))
      .then(unitor_white_right(n));
  return p;
}

/// u -> u' -> (u')'' must give back u.
template <ExactField F>
DiagramCheck<F> adjunction_roundtrip(const Presentation<F>& u, const Presentation<F>& l,
                                     const Morphism<F>& m) {
  const auto& n = m.dst();
  std::vector<std::string> objects{u.name(), l.name(), n.name()};
  auto arr = as_arrow("u", m);
  arr.src = black(u, l);
  if (!m.src().same_algebra(arr.src))
    throw InvalidMorphism("adjunction_roundtrip: source is not " + arr.src.name());
  auto curried = curry_path(u, l, arr);
  Path<F> right(arr.src);
  right.then(arr);
  if (!curried.valid()) return compare_paths("adjunction-roundtrip", objects, curried, right);
  auto left = uncurry_path(l, n, curried.as_arrow("u'", u));
  return compare_paths("adjunction-roundtrip", objects, left, right);
}

/// v -> v'' -> (v'')' must give back v.
template <ExactField F>
DiagramCheck<F> adjunction_roundtrip_rev(const Presentation<F>& l, const Presentation<F>& n,
                                         const Morphism<F>& m) {
  const auto& u = m.src();
  std::vector<std::string> objects{u.name(), l.name(), n.name()};
  auto arr = as_arrow("v", m);
  arr.dst = white(n, dual(l));
  if (!m.dst().same_algebra(arr.dst))
    throw InvalidMorphism("adjunction_roundtrip_rev: target is not " + arr.dst.name());
  auto uncurried = uncurry_path(l, n, arr);
  Path<F> right(u);
  right.then(arr);
  if (!uncurried.valid())
    return compare_paths("adjunction-roundtrip-rev", objects, uncurried, right);
  auto left = curry_path(u, l, uncurried.as_arrow("v''", black(u, l)));
  return compare_paths("adjunction-roundtrip-rev", objects, left, right);
}

// ---------------------------------------------------------------------------
// Duality

/// (U•V)^! and V^!∘U^! have the same relations once (U1 (x) V1)* is identified
/// with V1* (x) U1* by the flip.
template <ExactField F>
DiagramCheck<F> check_dual_antimultiplicative(const Presentation<F>& u, const Presentation<F>& v) {
  const F& f = u.field();
  auto lhs = dual(black(u, v));
  auto rhs = white(dual(v), dual(u));
  auto moved = push_subspace(tensor_square(flip(u.gens(), v.gens())), lhs.relations());
  DiagramCheck<F> c{"dual-antimultiplicative", {u.name(), v.name()}, false,
                    detail::one_by_one(f, true), "", false};
  if (moved.dim() != rhs.relations().dim()) {
    c.note = "relation dimensions differ";
    return c;
  }
  c.residual = moved.basis() - rhs.relations().basis();
  c.passed = c.residual.is_zero();
  if (!c.passed) c.note = "relation spaces differ";
  return c;
}

template <ExactField F>
DiagramCheck<F> check_double_dual(const Presentation<F>& u) {
  const F& f = u.field();
  auto dd = dual(dual(u));
  bool same = dd == u;
  return {"double-dual", {u.name()}, same, detail::one_by_one(f, !same),
          same ? "" : "dual(dual(U)) differs from U", false};
}

template <ExactField F>
std::vector<DiagramCheck<F>> check_unit_duality(const F& f) {
  std::vector<DiagramCheck<F>> out;
  bool a = dual(unit_black(f)).same_algebra(unit_white(f));
  bool b = dual(unit_white(f)).same_algebra(unit_black(f));
  out.push_back({"unit-duality", {"I_black"}, a, detail::one_by_one(f, !a), "", false});
  out.push_back({"unit-duality", {"I_white"}, b, detail::one_by_one(f, !b), "", false});
  return out;
}

/// U•I_•, I_••U, U∘I_∘ and I_∘∘U are each isomorphic to U through the
/// identity matrix: the reshape and its reverse must both be morphisms.
template <ExactField F>
std::vector<DiagramCheck<F>> check_unit_laws(const Presentation<F>& u) {
  const F& f = u.field();
  std::vector<DiagramCheck<F>> out;
  for (const auto& arr : {unitor_black_left(u), unitor_black_right(u), unitor_white_left(u),
                          unitor_white_right(u)}) {
    auto there = is_morphism(arr.src, arr.dst, arr.matrix);
    auto back = is_morphism(arr.dst, arr.src, arr.matrix);
    bool ok = there.ok && back.ok;
    DiagramCheck<F> c{"unit-law", {u.name(), arr.name}, ok, detail::one_by_one(f, false), "",
                      false};
    if (!there.ok)
      c.residual = Matrix<F>::row_vector(f, there.residual);
    else if (!back.ok)
      c.residual = Matrix<F>::row_vector(f, back.residual);
    if (!ok) c.note = arr.name + " is not an isomorphism";
    out.push_back(std::move(c));
  }
  return out;
}

/// The composite U'^! -> U'^!•(U∘U^!) -> (U'^!•U)∘U^! -> (U'^!•U')∘U^! -> U^!
/// equals the transpose of h.
template <ExactField F>
DiagramCheck<F> check_dual_morphism_composite(const Morphism<F>& h) {
  const auto& u = h.src();
  const auto& u2 = h.dst();
  auto u2d = dual(u2), ud = dual(u);
  Path<F> left(u2d);
  left.then(reversed(unitor_black_right(u2d)))
      .then(black_arrow(identity_arrow(u2d), arrow_c(u)))
      .then(arrow_h(u2d, u, ud))
      .then(white_arrow(black_arrow(identity_arrow(u2d), as_arrow("h", h)), identity_arrow(ud)))
      .then(white_arrow(arrow_d(u2), identity_arrow(ud)))
      .then(unitor_white_left(ud));
  Path<F> right(u2d);
  right.then(as_arrow("h^!", dual_morphism(h)));
  return compare_paths("dual-morphism-composite", {u.name(), u2.name()}, left, right);
}

/// (g∘f)^! = f^!∘g^!.
template <ExactField F>
DiagramCheck<F> check_dual_functorial(const Morphism<F>& f, const Morphism<F>& g) {
  auto gf = compose(g, f);
  Path<F> left(dual(g.dst()));
  left.then(as_arrow("(gf)^!", dual_morphism(gf)));
  Path<F> right(dual(g.dst()));
  right.then(as_arrow("g^!", dual_morphism(g))).then(as_arrow("f^!", dual_morphism(f)));
  return compare_paths("dual-functorial", {f.src().name(), f.dst().name(), g.dst().name()}, left,
                       right);
}

// ---------------------------------------------------------------------------
// Hom algebra

/// Composition Hom(U2,U3)•Hom(U1,U2) -> Hom(U1,U3) through f, Id∘h, Id∘(d∘Id).
template <ExactField F>
Path<F> composition_path(const Presentation<F>& u1, const Presentation<F>& u2,
                         const Presentation<F>& u3) {
  auto d1 = dual(u1), d2 = dual(u2);
  auto start = black(white(u3, d2), white(u2, d1));
  Path<F> p(start);
  p.then(arrow_f(u3, d2, white(u2, d1)))
      .then(white_arrow(identity_arrow(u3), arrow_h(d2, u2, d1)))
      .then(white_arrow(identity_arrow(u3), white_arrow(arrow_d(u2), identity_arrow(d1))))
      .then(white_arrow(identity_arrow(u3), unitor_white_left(d1)));
  return p;
}

/// l_U as an arrow Hom(U,U)•Hom(U,U) -> Hom(U,U); throws if the composite is not a morphism.
template <ExactField F>
Arrow<F> hom_product(const Presentation<F>& u) {
  auto p = composition_path(u, u, u);
  if (!p.valid()) throw InvalidMorphism("hom product: " + p.failure());
  auto hom = white(u, dual(u));
  return {"l_" + u.name(), black(hom, hom), hom, p.matrix()};
}

/// (a (x) u^i) (x) (b (x) u^j) |-> delta_ib a (x) u^j, written down directly.
template <ExactField F>
Matrix<F> contraction_matrix(const F& f, std::size_t n) {
  Matrix<F> m(f, n * n, n * n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(a * n + j, (a * n + i) * n * n + i * n + j) = f.one();
  return m;
}

template <ExactField F>
std::vector<DiagramCheck<F>> check_hom_algebra(const Presentation<F>& u) {
  const F& f = u.field();
  std::vector<DiagramCheck<F>> out;
  std::vector<std::string> objects{u.name()};
  auto hom = white(u, dual(u));
  auto hh = black(hom, hom);

  auto built = composition_path(u, u, u);
  Path<F> direct(hh);
  direct.then(Arrow<F>{"contraction", hh, hom, contraction_matrix(f, u.gens())});
  out.push_back(compare_paths("hom-product", objects, built, direct));
  if (!built.valid()) return out;
  Arrow<F> l{"l_" + u.name(), hh, hom, built.matrix()};

  auto triple = black(hh, hom);
  Path<F> left(triple);
  left.then(black_arrow(l, identity_arrow(hom))).then(l);
  Path<F> right(triple);
  right.then(arrow_assoc_black(hom, hom, hom)).then(black_arrow(identity_arrow(hom), l)).then(l);
  out.push_back(compare_paths("hom-associativity", objects, left, right));

  auto c = arrow_c(u);
  Path<F> ul(black(hom, unit_black(f)));
  ul.then(black_arrow(identity_arrow(hom), c)).then(l);
  Path<F> ur(black(hom, unit_black(f)));
  ur.then(unitor_black_right(hom));
  out.push_back(compare_paths("hom-unit-right", objects, ul, ur));

  Path<F> vl(black(unit_black(f), hom));
  vl.then(black_arrow(c, identity_arrow(hom))).then(l);
  Path<F> vr(black(unit_black(f), hom));
  vr.then(unitor_black_left(hom));
  out.push_back(compare_paths("hom-unit-left", objects, vl, vr));
  return out;
}

// ---------------------------------------------------------------------------
// Braiding

template <ExactField F>
DiagramCheck<F> check_braiding(const Presentation<F>& u1, const Presentation<F>& u2,
                               const Presentation<F>& u3) {
  auto start = black(u1, white(u2, u3));
  Path<F> left(start);
  left.then(arrow_braid_black(u1, white(u2, u3)))
      .then(black_arrow(arrow_braid_white(u2, u3), identity_arrow(u1)))
      .then(arrow_f(u3, u2, u1));
  Path<F> right(start);
  right.then(arrow_h(u1, u2, u3))
      .then(arrow_braid_white(black(u1, u2), u3))
      .then(white_arrow(identity_arrow(u3), arrow_braid_black(u1, u2)));
  return compare_paths("braiding-hexagon", {u1.name(), u2.name(), u3.name()}, left, right);
}

/// c' = c'_∘ ∘ c_U : I_• -> U^!∘U and d' = d_U ∘ c'_• : U•U^! -> I_∘ exhibit U as a dual of U^!.
template <ExactField F>
std::vector<DiagramCheck<F>> check_double_dual_zigzag(const Presentation<F>& u) {
  const F& f = u.field();
  auto ud = dual(u);
  Path<F> cp(unit_black(f));
  cp.then(arrow_c(u)).then(arrow_braid_white(u, ud));
  Path<F> dp(black(u, ud));
  dp.then(arrow_braid_black(u, ud)).then(arrow_d(u));
  std::vector<DiagramCheck<F>> out;
  if (!cp.valid() || !dp.valid()) {
    const auto& bad = cp.valid() ? dp : cp;
    out.push_back(compare_paths("double-dual-zigzag-left", {u.name()}, bad, bad));
    out.push_back(compare_paths("double-dual-zigzag-right", {u.name()}, bad, bad));
    return out;
  }
  auto c_prime = cp.as_arrow("c'", unit_black(f));
  auto d_prime = dp.as_arrow("d'", black(u, ud));

  auto start_l = black(unit_black(f), ud);
  Path<F> left(start_l);
  left.then(black_arrow(c_prime, identity_arrow(ud)))
      .then(arrow_f(ud, u, ud))
      .then(white_arrow(identity_arrow(ud), d_prime))
      .then(unitor_white_right(ud));
  Path<F> left_id(start_l);
  left_id.then(unitor_black_left(ud));
  out.push_back(compare_paths("double-dual-zigzag-left", {u.name()}, left, left_id));

  auto start_r = black(u, unit_black(f));
  Path<F> right(start_r);
  right.then(black_arrow(identity_arrow(u), c_prime))
      .then(arrow_h(u, ud, u))
      .then(white_arrow(d_prime, identity_arrow(u)))
      .then(unitor_white_left(u));
  Path<F> right_id(start_r);
  right_id.then(unitor_black_right(u));
  out.push_back(compare_paths("double-dual-zigzag-right", {u.name()}, right, right_id));
  return out;
}

/// U•V -> U∘V through the braidings, f and the map I_∘ -> I_•; equals the identity reshape.
template <ExactField F>
DiagramCheck<F> check_bullet_to_circle(const Presentation<F>& u, const Presentation<F>& v) {
  const F& f = u.field();
  auto io = unit_white(f);
  auto ib = unit_black(f);
  auto vo = white(v, io);
  Path<F> left(black(u, v));
  left.then(reshape_arrow("U•V=U•(V∘I_∘)", black(u, v), black(u, vo)))
      .then(arrow_braid_black(u, vo))
      .then(arrow_f(v, io, u))
      .then(white_arrow(identity_arrow(v),
                        black_arrow(reshape_arrow("I_∘→I_•", io, ib), identity_arrow(u))))
      .then(arrow_braid_white(v, black(ib, u)));
  Path<F> right(black(u, v));
  right.then(reshape_arrow("U•V→U∘V", black(u, v), white(u, v)));
  return compare_paths("bullet-to-circle", {u.name(), v.name()}, left, right);
}

// ---------------------------------------------------------------------------
// Rigid objects: vector spaces with the zero product

template <ExactField F>
void require_rigid(const Presentation<F>& u) {
  if (!u.relations().is_full())
    throw NotRigid(u.name() + " does not have full relations (not a vector space object)");
}

/// I_• -> U∘U^! -> U^!∘U -> U^!∘U (Id∘h) -> U∘U^! = U∘(U^!∘I_•) = U•(U^!∘I_•)
///     -> (U•U^!)∘I_• -> I_∘∘I_• = I_•, as a validated path.
template <ExactField F>
Path<F> trace_path(const Presentation<F>& u, const Matrix<F>& h) {
  require_rigid(u);
  const F& f = u.field();
  auto ud = dual(u);
  auto ib = unit_black(f);
  auto io = unit_white(f);
  auto udi = white(ud, ib);
  Arrow<F> harr{"h", u, u, h};
  Path<F> p(ib);
  p.then(arrow_c(u))
      .then(arrow_braid_white(u, ud))
      .then(white_arrow(identity_arrow(ud), harr))
      .then(arrow_braid_white(ud, u))
      .then(reshape_arrow("U∘U^!=U∘(U^!∘I_•)", white(u, ud), white(u, udi)))
      .then(reshape_arrow("U∘(U^!∘I_•)=U•(U^!∘I_•)", white(u, udi), black(u, udi)))
      .then(arrow_h(u, ud, ib));
  Path<F> dprime(black(u, ud));
  dprime.then(arrow_braid_black(u, ud)).then(arrow_d(u));
  if (!dprime.valid() || !p.valid()) return p;
  p.then(white_arrow(dprime.as_arrow("d'", black(u, ud)), identity_arrow(ib)))
      .then(reshape_arrow("I_∘∘I_•=I_•", white(io, ib), ib));
  return p;
}

/// The categorical trace of an endomorphism of a rigid object, as a scalar.
template <ExactField F>
typename F::Element categorical_trace(const Presentation<F>& u, const Matrix<F>& h) {
  auto p = trace_path(u, h);
  if (!p.valid()) throw InvalidMorphism("trace composite: " + p.failure());
  return p.matrix()(0, 0);
}

template <ExactField F>
typename F::Element rank_of(const Presentation<F>& u) {
  return categorical_trace(u, Matrix<F>::identity(u.field(), u.gens()));
}

template <ExactField F>
DiagramCheck<F> check_trace(const Presentation<F>& u, const Matrix<F>& h) {
  const F& f = u.field();
  auto p = trace_path(u, h);
  Path<F> direct(unit_black(f));
  direct.then(Arrow<F>{"tr", unit_black(f), unit_black(f),
                       Matrix<F>::row_vector(f, {trace(h)})});
  return compare_paths("trace", {u.name()}, p, direct);
}

template <ExactField F>
DiagramCheck<F> check_rank(const Presentation<F>& u) {
  const F& f = u.field();
  auto p = trace_path(u, Matrix<F>::identity(f, u.gens()));
  Path<F> direct(unit_black(f));
  direct.then(Arrow<F>{"dim", unit_black(f), unit_black(f),
                       Matrix<F>::row_vector(f, {f.from_int(static_cast<long long>(u.gens()))})});
  return compare_paths("rank", {u.name()}, p, direct);
}

/// Measures whether Trace(h h') = Trace(h) Trace(h'); reported, never counted as a failure.
template <ExactField F>
DiagramCheck<F> measure_trace_multiplicativity(const Presentation<F>& u, const Matrix<F>& h,
                                               const Matrix<F>& h2) {
  const F& f = u.field();
  auto lhs = categorical_trace(u, h * h2);
  auto rhs = f.mul(categorical_trace(u, h), categorical_trace(u, h2));
  DiagramCheck<F> c{"trace-multiplicativity", {u.name()}, false,
                    Matrix<F>::row_vector(f, {f.sub(lhs, rhs)}), "", true};
  c.passed = f.is_zero(c.residual(0, 0));
  c.note = "Trace(hh')=" + f.to_string(lhs) + " Trace(h)Trace(h')=" + f.to_string(rhs);
  return c;
}

/// Both U1∘U2 and U1•U2 of two vector-space objects are the vector space on the product.
template <ExactField F>
DiagramCheck<F> check_rigid_products(const Presentation<F>& u1, const Presentation<F>& u2) {
  require_rigid(u1);
  require_rigid(u2);
  auto w = white(u1, u2), b = black(u1, u2);
  bool ok = w.same_algebra(b) && w.relations().is_full();
  return {"rigid-white-equals-black", {u1.name(), u2.name()}, ok,
          detail::one_by_one(u1.field(), !ok), ok ? "" : "products differ", false};
}

// ---------------------------------------------------------------------------
// Contragredients and automorphisms

/// (h∘h')∘c_U = c_V and d_V∘(h'•h) = d_U, for h : U -> V and h' : U^! -> V^!.
template <ExactField F>
std::vector<DiagramCheck<F>> contragredient_check(const Morphism<F>& h, const Morphism<F>& hp) {
  const auto& u = h.src();
  const auto& v = h.dst();
  const F& f = u.field();
  std::vector<std::string> objects{u.name(), v.name()};
  std::vector<DiagramCheck<F>> out;
  if (!hp.src().same_algebra(dual(u)) || !hp.dst().same_algebra(dual(v)))
    throw InvalidMorphism("contragredient candidate must map U^! to V^!");
  auto ha = as_arrow("h", h), hpa = as_arrow("h'", hp);

  Path<F> cl(unit_black(f));
  cl.then(arrow_c(u)).then(white_arrow(ha, hpa));
  Path<F> cr(unit_black(f));
  cr.then(arrow_c(v));
  out.push_back(compare_paths("contragredient-unit", objects, cl, cr));

  Path<F> dl(black(dual(u), u));
  dl.then(black_arrow(hpa, ha)).then(arrow_d(v));
  Path<F> dr(black(dual(u), u));
  dr.then(arrow_d(u));
  out.push_back(compare_paths("contragredient-counit", objects, dl, dr));
  return out;
}

/// The h' solving both contragredient equations, if the linear system is consistent:
/// h X^T = I_V and X^T h = I_U.
template <ExactField F>
std::optional<Matrix<F>> solve_contragredient(const Matrix<F>& h) {
  const F& f = h.field();
  const std::size_t nv = h.rows(), nu = h.cols();
  const std::size_t unknowns = nv * nu;  // X(p, q) at p * nu + q
  Matrix<F> a(f, nv * nv + nu * nu, unknowns);
  Vector<F> b(nv * nv + nu * nu, f.zero());
  for (std::size_t r = 0; r < nv; ++r)
    for (std::size_t s = 0; s < nv; ++s) {
      std::size_t row = r * nv + s;
      for (std::size_t q = 0; q < nu; ++q) a(row, s * nu + q) = h(r, q);
      if (r == s) b[row] = f.one();
    }
  for (std::size_t r = 0; r < nu; ++r)
    for (std::size_t s = 0; s < nu; ++s) {
      std::size_t row = nv * nv + r * nu + s;
      for (std::size_t p = 0; p < nv; ++p) a(row, p * nu + r) = h(p, s);
      if (r == s) b[row] = f.one();
    }
  auto x = solve(a, std::span<const typename F::Element>(b));
  if (!x) return std::nullopt;
  Matrix<F> m(f, nv, nu);
  for (std::size_t p = 0; p < nv; ++p)
    for (std::size_t q = 0; q < nu; ++q) m(p, q) = (*x)[p * nu + q];
  return m;
}

template <ExactField F>
struct InvertibilityReport {
  bool equations_hold = false;
  bool invertible = false;
  bool inverse_is_morphism = false;
  std::optional<Matrix<F>> inverse;
  /// The implication "contragredient exists => h invertible with a morphism inverse".
  bool consistent() const { return !equations_hold || (invertible && inverse_is_morphism); }
};

template <ExactField F>
InvertibilityReport<F> contragredient_invertibility(const Morphism<F>& h, const Morphism<F>& hp) {
  InvertibilityReport<F> r;
  r.equations_hold = true;
  for (const auto& c : contragredient_check(h, hp)) r.equations_hold = r.equations_hold && c.passed;
  r.inverse = inverse(h.matrix());
  r.invertible = r.inverse.has_value();
  if (r.invertible) r.inverse_is_morphism = is_morphism(h.dst(), h.src(), *r.inverse).ok;
  return r;
}

/// M invertible and (M (x) M)(R) = R exactly.
template <ExactField F>
bool automorphism_check(const Presentation<F>& u, const Matrix<F>& m) {
  if (m.rows() != u.gens() || m.cols() != u.gens()) return false;
  if (!inverse(m)) return false;
  return push_tensor_square(m, u.relations()) == u.relations();
}

}  // namespace qcat
