#pragma once

/**
 * @file suites.hpp
 * @brief Named groups of law checks run over a pool of algebras.
 *
 * Checks that depend only on an object (double dual, zig-zags, Hom algebra)
 * run once per pool member. Checks that need morphisms draw them per trial
 * with the generators of sampling.hpp. An empty pool means every trial draws
 * fresh random presentations on one or two generators.
 *
 * Diagrams whose objects multiply out to more than `max_product_gens`
 * generators are skipped and reported as such; nothing is silently dropped.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcat/laws.hpp"
#include "qcat/sampling.hpp"

namespace qcat {

enum class Suite { Axioms, Duality, Braiding, HomAlgebra, Rigid, All };

inline std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "axioms") return Suite::Axioms;
  if (s == "duality") return Suite::Duality;
  if (s == "braiding") return Suite::Braiding;
  if (s == "hom-algebra") return Suite::HomAlgebra;
  if (s == "rigid") return Suite::Rigid;
  if (s == "all") return Suite::All;
  return std::nullopt;
}

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::Axioms: return "axioms";
    case Suite::Duality: return "duality";
    case Suite::Braiding: return "braiding";
    case Suite::HomAlgebra: return "hom-algebra";
    case Suite::Rigid: return "rigid";
    case Suite::All: return "all";
  }
  return "";
}

struct SuiteConfig {
  Suite suite = Suite::All;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_product_gens = 64;
  std::size_t max_hom_gens = 2;  // Hom(U,U)•Hom(U,U)•Hom(U,U) has n^6 generators
};

template <ExactField F>
struct SuiteReport {
  std::vector<DiagramCheck<F>> checks;  // sorted by name, then objects
  std::vector<std::string> skipped;     // "<check> <objects>: <reason>"

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.informational && !c.passed) return false;
    return true;
  }
};

namespace detail {

template <ExactField F>
class SuiteRunner {
 public:
  SuiteRunner(F field, std::vector<Presentation<F>> pool, SuiteConfig cfg)
      : field_(std::move(field)), pool_(std::move(pool)), cfg_(cfg), rng_(cfg.seed) {}

  SuiteReport<F> run() {
    const Suite s = cfg_.suite;
    auto wants = [&](Suite x) { return s == Suite::All || s == x; };
    if (wants(Suite::Duality)) add(check_unit_duality(field_));
    if (!pool_.empty()) {
      for (const auto& u : pool_) object_checks(u, wants);
      if (wants(Suite::Rigid)) rigid_objects_once();
    } else if (wants(Suite::Rigid)) {
      rigid_objects_once();
    }
    for (std::size_t t = 0; t < cfg_.trials; ++t) {
      trial_ = t;
      if (pool_.empty()) {
        auto u = fresh("a");
        object_checks(u, wants);
      }
      if (wants(Suite::Axioms)) axioms_trial();
      if (wants(Suite::Duality)) duality_trial();
      if (wants(Suite::Braiding)) braiding_trial();
      if (wants(Suite::Rigid)) rigid_trial();
    }
    sort_checks(report_.checks);
    return std::move(report_);
  }

 private:
  template <class Wants>
  void object_checks(const Presentation<F>& u, Wants wants) {
    if (wants(Suite::Axioms)) {
      add(check_zigzag_left(u));
      add(check_zigzag_right(u));
      add(check_unit_laws(u));
    }
    if (wants(Suite::Duality)) add(check_double_dual(u));
    if (wants(Suite::Braiding)) add(check_double_dual_zigzag(u));
    if (wants(Suite::HomAlgebra)) {
      if (u.gens() <= cfg_.max_hom_gens)
        add(check_hom_algebra(u));
      else
        skip("hom-algebra", {u.name()}, "more than " + std::to_string(cfg_.max_hom_gens) +
                                            " generators");
    }
  }

  Presentation<F> fresh(const std::string& tag) {
    auto n = rng_.index_between(1, 2);
    return random_presentation(field_, n, rng_, "R" + std::to_string(trial_) + tag);
  }

  Presentation<F> pick(const std::string& tag) {
    if (pool_.empty()) return fresh(tag);
    return pool_[rng_.below(pool_.size())];
  }

  // k objects whose generator counts multiply to at most the cap
  std::optional<std::vector<Presentation<F>>> pick_tuple(std::size_t k, std::size_t cap) {
    static const char* tags[] = {"a", "b", "c", "d"};
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<Presentation<F>> out;
      std::size_t prod = 1;
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back(pick(tags[i]));
        prod *= out.back().gens();
      }
      if (prod <= cap) return out;
      if (!pool_.empty() && smallest_pool_product(k) > cap) break;
    }
    return std::nullopt;
  }

  std::size_t smallest_pool_product(std::size_t k) const {
    std::size_t m = pool_.front().gens();
    for (const auto& p : pool_) m = std::min(m, p.gens());
    std::size_t prod = 1;
    for (std::size_t i = 0; i < k; ++i) prod *= m;
    return prod;
  }

  std::string trial_label() const { return "trial " + std::to_string(trial_); }

  Morphism<F> morphism_from(const Presentation<F>& u) {
    auto n = rng_.index_between(1, std::max<std::size_t>(1, u.gens()));
    return random_morphism_from(u, n, rng_, u.name() + "'");
  }

  void axioms_trial() {
    auto objs = pick_tuple(4, cfg_.max_product_gens);
    if (!objs) return skip("axiom-diagrams", {trial_label()}, "objects exceed the size cap");
    const auto& o = *objs;
    auto m1 = morphism_from(o[0]);
    auto m2 = morphism_from(o[1]);
    auto m3 = morphism_from(o[2]);
    add(check_mixed_associativity_black(o[0], o[1], o[2], o[3]));
    add(check_mixed_associativity_white(o[0], o[1], o[2], o[3]));
    add(check_naturality_h(m1, m2, m3));
    add(check_naturality_f(m1, m2, m3));

    // u : U•L -> N, and v : U' -> N'∘L'^!
    auto ul = black(o[0], o[1]);
    auto u = random_morphism_from(ul, rng_.index_between(1, 2), rng_, "N" + std::to_string(trial_));
    add(adjunction_roundtrip(o[0], o[1], u));
    auto target = white(o[3], dual(o[2]));
    auto v = random_morphism_into(target, rng_.index_between(1, 2), rng_,
                                  "U" + std::to_string(trial_));
    add(adjunction_roundtrip_rev(o[2], o[3], v));
  }

  void duality_trial() {
    auto objs = pick_tuple(2, cfg_.max_product_gens);
    if (!objs) return skip("duality", {trial_label()}, "objects exceed the size cap");
    const auto& u = (*objs)[0];
    const auto& w = (*objs)[1];
    add(check_dual_antimultiplicative(u, w));

    auto f = morphism_from(u);
    auto g = morphism_from(f.dst());
    add(check_dual_functorial(f, g));
    add(check_dual_morphism_composite(f));

    // an isomorphism onto its pushforward has the inverse transpose as contragredient
    const std::size_t n = u.gens();
    auto h = random_invertible(field_, n, rng_);
    auto v = pushforward(u, h, 0, rng_, u.name() + "^h");
    Morphism<F> hm(u, v, h);
    Morphism<F> hp(dual(u), dual(v), inverse(h)->transpose());
    auto cc = contragredient_check(hm, hp);
    add(cc);
    auto inv = contragredient_invertibility(hm, hp);
    add(DiagramCheck<F>{"contragredient-invertible", {u.name(), v.name()}, inv.consistent(),
                        detail::one_by_one(field_, !inv.consistent()),
                        inv.consistent() ? "" : "contragredient exists but h has no inverse morphism",
                        false});

    // a singular map admits no contragredient at all
    auto s = random_matrix(field_, n, n, rng_);
    for (std::size_t i = 0; i < n; ++i) s(i, n - 1) = field_.zero();
    bool none = !solve_contragredient(s).has_value();
    add(DiagramCheck<F>{"contragredient-singular", {u.name()}, none,
                        detail::one_by_one(field_, !none),
                        none ? "" : "singular matrix solved the contragredient equations", false});
  }

  void braiding_trial() {
    auto objs = pick_tuple(3, cfg_.max_product_gens);
    if (!objs) return skip("braiding-hexagon", {trial_label()}, "objects exceed the size cap");
    const auto& o = *objs;
    add(check_braiding(o[0], o[1], o[2]));
    add(check_bullet_to_circle(o[0], o[1]));
  }

  std::vector<Presentation<F>> rigid_pool() const {
    std::vector<Presentation<F>> out;
    for (const auto& p : pool_)
      if (p.relations().is_full() && p.gens() > 0) out.push_back(p);
    if (out.empty())
      for (std::size_t d = 1; d <= 3; ++d) out.push_back(embed_vector_space(field_, d));
    return out;
  }

  void rigid_objects_once() {
    for (const auto& u : rigid_pool()) {
      add(check_rank(u));
      if (pool_.empty()) {
        add(check_zigzag_left(u));
        add(check_zigzag_right(u));
      }
    }
  }

  void rigid_trial() {
    auto rigid = rigid_pool();
    const auto& u = rigid[rng_.below(rigid.size())];
    const auto& u2 = rigid[rng_.below(rigid.size())];
    const std::size_t d = u.gens();
    auto h = random_matrix(field_, d, d, rng_);
    auto h2 = random_matrix(field_, d, d, rng_);
    add(check_trace(u, h));
    add(measure_trace_multiplicativity(u, h, h2));
    add(check_rigid_products(u, u2));
  }

  void add(DiagramCheck<F> c) { report_.checks.push_back(std::move(c)); }
  void add(std::vector<DiagramCheck<F>> cs) {
    for (auto& c : cs) add(std::move(c));
  }
  void skip(const std::string& name, const std::vector<std::string>& objects,
            const std::string& why) {
    std::string label;
    for (std::size_t i = 0; i < objects.size(); ++i) label += (i ? "," : "") + objects[i];
    report_.skipped.push_back(name + " " + label + ": " + why);
  }

  F field_;
  std::vector<Presentation<F>> pool_;
  SuiteConfig cfg_;
  Rng rng_;
  std::size_t trial_ = 0;
  SuiteReport<F> report_;
};

}  // namespace detail

/// Runs a suite over `pool` (all of one field); an empty pool draws random objects.
template <ExactField F>
SuiteReport<F> run_suite(const F& field, std::vector<Presentation<F>> pool, const SuiteConfig& cfg) {
  for (const auto& p : pool) require_same_field(field, p.field());
  return detail::SuiteRunner<F>(field, std::move(pool), cfg).run();
}

}  // namespace qcat
