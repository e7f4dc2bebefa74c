// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "support.hpp"
#include "qcat.hpp"
#include "qcat/cli.hpp"

using namespace qcat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

template <class Fn>
void for_corpus(Fn&& fn) {
  for (const auto& e : support::corpus()) std::visit([&](const auto& a) { fn(e.file, a); }, e.algebra);
}

Outcome duality_involution() {
  Outcome o;
  std::size_t count = 0;
  for_corpus([&](const std::string& file, const auto& a) {
    ++count;
    if (!(dual(dual(a)) == a) || unparse(dual(dual(a))) != unparse(a)) o.fail(file + " changes under dual∘dual");
  });
  PrimeField f(5);
  Rng rng(1001);
  for (int t = 0; t < 200; ++t) {
    auto a = random_presentation(f, rng.index_between(1, 3), rng, "R" + std::to_string(t));
    if (!(dual(dual(a)) == a) || unparse(dual(dual(a))) != unparse(a)) o.fail(a.name() + " changes under dual∘dual");
  }
  if (o.pass) o.detail = std::to_string(count) + " corpus files, 200 random GF(5) presentations";
  return o;
}

Outcome dimension_formulas() {
  Outcome o;
  PrimeField f(5);
  Rng rng(1002);
  for (int t = 0; t < 200; ++t) {
    auto a = random_presentation(f, rng.index_between(1, 3), rng, "A");
    auto b = random_presentation(f, rng.index_between(1, 3), rng, "B");
    const std::size_t n1 = a.gens(), n2 = b.gens(), c1 = a.relations().dim(), c2 = b.relations().dim();
    if (black(a, b).relations().dim() != c1 * c2) o.fail("black dimension, pair " + std::to_string(t));
    if (white(a, b).relations().dim() != n1 * n1 * c2 + c1 * n2 * n2 - c1 * c2)
      o.fail("white dimension, pair " + std::to_string(t));
  }
  if (o.pass) o.detail = "200 random GF(5) pairs";
  return o;
}

template <class F>
void unit_checks_on(Outcome& o, const Presentation<F>& a) {
  for (const auto& c : check_unit_laws(a))
    if (!c.passed) o.fail(c.name + " " + objects_label(c));
}

Outcome unit_laws() {
  Outcome o;
  for_corpus([&](const std::string&, const auto& a) { unit_checks_on(o, a); });
  PrimeField f5(5);
  Rng rng(1003);
  for (int t = 0; t < 50; ++t) unit_checks_on(o, random_presentation(f5, rng.index_between(1, 3), rng, "R"));
  auto duality = [&](const auto& field) {
    for (const auto& c : check_unit_duality(field))
      if (!c.passed) o.fail("unit-duality over " + field.name());
  };
  duality(Rationals());
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) duality(PrimeField(p));
  if (o.pass) o.detail = "corpus + 50 random GF(5); unit duality over Q, GF(2,3,5,7)";
  return o;
}

template <class F>
void suite_run(Outcome& o, const F& field, std::size_t trials, std::uint64_t seed, std::string& summary) {
  SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  auto rep = run_suite(field, {}, cfg);
  std::size_t failed = 0, info = 0;
  std::set<std::string> names;
  for (const auto& c : rep.checks) {
    names.insert(c.name);
    if (c.informational) ++info;
    else if (!c.passed) {
      ++failed;
      o.fail(c.name + " " + objects_label(c) + " over " + field.name());
    }
  }
  for (const char* required :
       {"mixed-associativity-black", "mixed-associativity-white", "naturality-h", "naturality-f",
        "zigzag-left", "zigzag-right", "braiding-hexagon", "adjunction-roundtrip",
        "adjunction-roundtrip-rev", "dual-antimultiplicative", "hom-associativity", "unit-law"})
    if (!names.count(required)) o.fail(std::string("no ") + required + " checks over " + field.name());
  if (!rep.skipped.empty()) o.fail(std::to_string(rep.skipped.size()) + " skipped over " + field.name());
  summary += (summary.empty() ? "" : "; ") + field.name() + " " + std::to_string(trials) + " trials: " +
             std::to_string(rep.checks.size() - info) + " checks, " + std::to_string(failed) + " failed";
}

Outcome axiom_suite() {
  Outcome o;
  std::string summary;
  suite_run(o, PrimeField(5), 100, 4, summary);
  suite_run(o, Rationals(), 20, 4, summary);
  if (o.pass) o.detail = summary;
  return o;
}

Outcome dh_squared() {
  Outcome o;
  std::size_t total = 0, least = SIZE_MAX;
  for_corpus([&](const std::string& file, const auto& a) {
    Rng rng(1005);
    auto endos = sample_endomorphisms(a, 50, rng);
    least = std::min(least, endos.size());
    if (endos.size() < 50) o.fail(file + ": only " + std::to_string(endos.size()) + " endomorphisms");
    for (const auto& h : endos) {
      ++total;
      if (!dh_square_is_zero(a, h).zero) o.fail(file + ": (d_h)^2 != 0");
    }
  });
  if (o.pass) o.detail = std::to_string(total) + " endomorphisms, at least " + std::to_string(least) + " per algebra";
  return o;
}

Outcome koszul_engine() {
  Outcome o;
  Rationals q;
  std::vector<Presentation<Rationals>> algebras;
  for (auto stem : {"sym2", "sym3", "ext2", "ext3", "free1", "free2", "embed2", "embed3", "unit_black"})
    algebras.push_back(support::load<Rationals>(stem));
  algebras.push_back(embed_vector_space(q, 1));
  algebras.push_back(unit_white(q));
  for (const auto& a : algebras) {
    GradedAlgebra<Rationals> ga(a), gd(dual(a));
    auto v = koszul_verdict(ga, gd, 6);
    if (!v.koszul) o.fail(a.name() + " not Koszul-up-to-6");
    auto basis = a.relations().basis();
    for (std::size_t m = 0; m <= 6; ++m)
      if (ga.dim(m) != oracle::graded_dim(q, a.gens(), basis, m))
        o.fail(a.name() + " Hilbert mismatch in degree " + std::to_string(m));
    for (const auto& l : euler_hilbert_lines(ga, gd, 8))
      if (!l.ok) o.fail(a.name() + " Euler identity fails in degree " + std::to_string(l.degree));
  }
  if (o.pass) o.detail = std::to_string(algebras.size()) + " algebras; slices to 6, oracle Hilbert to 6, Euler to 8";
  return o;
}

Outcome ext_equivalence() {
  Outcome o;
  std::size_t koszul = 0, count = 0;
  for_corpus([&](const std::string& file, const auto& a) {
    ++count;
    using F = std::decay_t<decltype(a.field())>;
    GradedAlgebra<F> ga(a), gd(dual(a));
    auto verdict = koszul_verdict(ga, gd, 4).koszul;
    auto ext = ext_diagonal_check(ga, gd, 4).ok;
    koszul += verdict;
    if (verdict != ext) o.fail(file + ": bar and Koszul engines disagree");
    auto table = bar_homology(ga, 4);
    for (std::size_t p = 0; p <= 4; ++p)
      if (table.at(p, p) != gd.dim(p)) o.fail(file + ": diagonal differs from dual dims at p=" + std::to_string(p));
  });
  if (o.pass)
    o.detail = std::to_string(count) + " corpus algebras agree (" + std::to_string(koszul) + " Koszul-up-to-4)";
  return o;
}

Outcome negative_control() {
  Outcome o;
  auto r = search_euler_failure(PrimeField(2), 3, 6);
  if (!r.found) {
    o.fail("search found no Euler failure");
    return o;
  }
  const auto& a = *r.found;
  if (!(a == support::load<PrimeField>("gf2_nonkoszul"))) o.fail("find differs from corpus/gf2_nonkoszul.qa");
  if (euler_hilbert_holds(a, 6)) o.fail("Euler identity holds on the find");
  if (koszul_verdict(a, 6).koszul) o.fail("Koszul engine calls the find Koszul");
  if (ext_diagonal_check(a, 6).ok) o.fail("bar engine calls the find Koszul");
  if (o.pass) {
    std::string rels;
    for (const auto& row : a.relations().rows()) rels += (rels.empty() ? "" : ", ") + relation_text(a, row);
    o.detail = "candidate " + std::to_string(r.candidates) + ": R = span{" + rels + "}; both engines say not Koszul";
  }
  return o;
}

Outcome trace_and_rank() {
  Outcome o;
  PrimeField f(3);
  std::size_t checked = 0;
  std::string counterexample;
  for (std::size_t d = 1; d <= 3; ++d) {
    auto u = embed_vector_space(f, d);
    for (const auto& h : all_endomorphisms(u)) {
      ++checked;
      if (categorical_trace(u, h) != trace(h)) o.fail("trace mismatch on embed" + std::to_string(d));
    }
    if (rank_of(u) != f.from_int(static_cast<long long>(d))) o.fail("rank of embed" + std::to_string(d));
    if (rank_of(embed_vector_space(Rationals(), d)) != static_cast<long>(d))
      o.fail("rank of embed" + std::to_string(d) + " over Q");
  }
  // first pair (h, h') on embed2 in enumeration order where the product law fails
  auto u = embed_vector_space(f, 2);
  auto all = all_endomorphisms(u);
  for (std::size_t i = 0; i < all.size() && counterexample.empty(); ++i)
    for (std::size_t j = 0; j < all.size() && counterexample.empty(); ++j) {
      auto m = measure_trace_multiplicativity(u, all[i], all[j]);
      if (!m.passed)
        counterexample = "h=" + all[i].to_string() + " h'=" + all[j].to_string() + " " + m.note;
    }
  if (o.pass)
    o.detail = std::to_string(checked) + " endomorphisms over GF(3); Trace(hh') counterexample: " +
               (counterexample.empty() ? "none found" : counterexample);
  return o;
}

Outcome golden_files() {
  Outcome o;
  std::istringstream cases(support::read_file(support::source_dir() / "tests/golden/cases.txt"));
  std::size_t count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    std::string name = line.substr(0, tab);
    std::vector<std::string> args;
    std::istringstream words(line.substr(tab + 1));
    for (std::string w; words >> w;) args.push_back(w);
    std::ostringstream out, err;
    std::istringstream in;
    int code = run_cli(args, out, err, in);
    std::string got = out.str();
    if (!err.str().empty()) got += "--- stderr\n" + err.str();
    got += "--- exit " + std::to_string(code) + "\n";
    ++count;
    if (got != support::read_file(support::source_dir() / "tests/golden" / (name + ".out"))) o.fail(name + " differs");
  }
  if (count == 0) o.fail("no golden cases");
  if (o.pass) o.detail = std::to_string(count) + " invocations byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"duality involution", duality_involution},
      {"Manin dimension formulas", dimension_formulas},
      {"unit laws and unit duality", unit_laws},
      {"axiom suites", axiom_suite},
      {"(d_h)^2 = 0", dh_squared},
      {"Koszulity engine", koszul_engine},
      {"Ext diagonal vs Koszul verdict", ext_equivalence},
      {"negative control", negative_control},
      {"trace and rank", trace_and_rank},
      {"CLI golden files", golden_files},
  };
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].title << " ["
              << timing << "] " << o.detail << std::endl;
    all = all && o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.1fs\n", total);
  return all ? 0 : 1;
}
