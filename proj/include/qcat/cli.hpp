#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch for the qcat tool, callable in-process.
 *
 * Output comes in two modes. Text is meant for people; presentation-valued
 * commands print a file that parses back. Structured output is one record
 * per line: a record type followed by key=value pairs. Values that contain
 * spaces, quotes or '=' are double-quoted with backslash escapes.
 *
 * Exit codes: 0 success, 1 a check failed, 2 usage, parse or input error.
 */

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "qcat/graded.hpp"
#include "qcat/io.hpp"
#include "qcat/koszul.hpp"
#include "qcat/laws.hpp"
#include "qcat/suites.hpp"

namespace qcat {

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

inline std::string quote_value(const std::string& v) {
  bool plain = !v.empty();
  for (char c : v)
    if (c == ' ' || c == '\t' || c == '"' || c == '=' || c == '\\' || c == '\n') plain = false;
  if (plain) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

inline std::string join(const std::vector<std::size_t>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

inline const char* boolean(bool b) { return b ? "true" : "false"; }

/// Writes either text lines or structured records.
class Emitter {
 public:
  Emitter(std::ostream& out, bool structured) : out_(out), structured_(structured) {}

  bool structured() const { return structured_; }

  void text(const std::string& line) {
    if (!structured_) out_ << line << "\n";
  }

  void raw_text(const std::string& block) {
    if (!structured_) out_ << block;
  }

  void record(const std::string& type,
              const std::vector<std::pair<std::string, std::string>>& fields) {
    if (!structured_) return;
    out_ << type;
    for (const auto& [k, v] : fields) out_ << " " << k << "=" << quote_value(v);
    out_ << "\n";
  }

 private:
  std::ostream& out_;
  bool structured_;
};

struct Options {
  std::string format = "text";
  std::size_t max_degree = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string kind = "black";
  std::string suite = "all";
  std::string partner;
  std::vector<std::string> files;
};

/// Failure while reading or interpreting input, reported with exit code 2.
struct InputError {
  std::string kind;
  std::string file;
  std::size_t line = 0, column = 0;
  std::string message;
};

inline std::string error_kind(const Error& e) {
  if (dynamic_cast<const FieldMismatch*>(&e)) return "field-mismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
  if (dynamic_cast<const InvalidMorphism*>(&e)) return "invalid-morphism";
  if (dynamic_cast<const NotRigid*>(&e)) return "not-rigid";
  if (dynamic_cast<const InvalidField*>(&e)) return "invalid-field";
  return "error";
}

inline void report_error(Emitter& em, std::ostream& err, const InputError& e) {
  if (em.structured()) {
    em.record("error", {{"kind", e.kind},
                        {"file", e.file},
                        {"line", std::to_string(e.line)},
                        {"column", std::to_string(e.column)},
                        {"message", e.message}});
    return;
  }
  err << "error: ";
  if (!e.file.empty()) {
    err << e.file;
    if (e.line) err << ":" << e.line << ":" << e.column;
    err << ": ";
  }
  err << e.message << "\n";
}

inline AnyPresentation load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError{"io", path, 0, 0, "cannot open file"};
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError{"parse:" + e.kind(), path, e.line(), e.column(), e.detail()};
  } catch (const Error& e) {
    throw InputError{"invalid", path, 0, 0, e.what()};
  }
}

template <ExactField F>
void emit_presentation(Emitter& em, const Presentation<F>& a) {
  em.raw_text(unparse(a));
  em.record("presentation", {{"field", a.field().name()},
                             {"name", a.name()},
                             {"gens", std::to_string(a.gens())},
                             {"relations", std::to_string(a.relations().dim())}});
  for (std::size_t i = 0; i < a.gens(); ++i)
    em.record("generator", {{"index", std::to_string(i)}, {"label", a.labels()[i]}});
  for (std::size_t i = 0; i < a.relations().dim(); ++i)
    em.record("relation",
              {{"index", std::to_string(i)}, {"terms", relation_text(a, a.relations().row(i))}});
}

// Applies fn to two presentations over the same field type.
template <class Fn>
int with_pair(const AnyPresentation& a, const AnyPresentation& b, Fn fn) {
  return std::visit(
      [&](const auto& x, const auto& y) -> int {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          require_same_field(x.field(), y.field());
          return fn(x, y);
        } else {
          throw FieldMismatch("inputs are over different fields");
        }
      },
      a, b);
}

// ---------------------------------------------------------------------------

inline int cmd_dual(Emitter& em, const AnyPresentation& a) {
  std::visit([&](const auto& p) { emit_presentation(em, dual(p)); }, a);
  return kExitOk;
}

inline int cmd_product(Emitter& em, const std::string& kind, const AnyPresentation& a,
                       const AnyPresentation& b) {
  return with_pair(a, b, [&](const auto& x, const auto& y) {
    const bool is_black = kind == "black";
    auto p = is_black ? black(x, y) : white(x, y);
    const std::size_t n1 = x.gens(), n2 = y.gens();
    const std::size_t c1 = x.relations().dim(), c2 = y.relations().dim();
    const std::size_t expected = is_black ? c1 * c2 : n1 * n1 * c2 + c1 * n2 * n2 - c1 * c2;
    const bool ok = expected == p.relations().dim();
    em.text("# " + kind + " product: generators " + std::to_string(n1) + "*" +
            std::to_string(n2) + " = " + std::to_string(p.gens()) + ", relations " +
            std::to_string(p.relations().dim()) + " (closed form " + std::to_string(expected) +
            ")");
    em.record("product", {{"kind", kind},
                          {"gens", std::to_string(p.gens())},
                          {"relations", std::to_string(p.relations().dim())},
                          {"expected_relations", std::to_string(expected)},
                          {"formula_ok", boolean(ok)}});
    emit_presentation(em, p);
    return ok ? kExitOk : kExitFail;
  });
}

inline int cmd_hom(Emitter& em, const AnyPresentation& u, const AnyPresentation& v) {
  return with_pair(u, v, [&](const auto& x, const auto& y) {
    emit_presentation(em, internal_hom(x, y));
    return kExitOk;
  });
}

inline int cmd_hilbert(Emitter& em, std::size_t n, const AnyPresentation& a) {
  std::visit(
      [&](const auto& p) {
        auto dims = hilbert(p, n);
        for (std::size_t m = 0; m < dims.size(); ++m) {
          em.text(std::to_string(m) + ": " + std::to_string(dims[m]));
          em.record("hilbert", {{"degree", std::to_string(m)}, {"dim", std::to_string(dims[m])}});
        }
      },
      a);
  return kExitOk;
}

inline int cmd_koszul(Emitter& em, std::size_t n, const AnyPresentation& a) {
  return std::visit(
      [&](const auto& p) {
        auto v = koszul_verdict(p, n);
        em.text("second Koszul complex of " + p.name() + " over " + p.field().name());
        for (const auto& r : v.reports) {
          em.text("m=" + std::to_string(r.internal_degree) + " dims " + join(r.position_dims) +
                  " homology " + join(r.homology_dims) + (r.exact ? " exact" : " NOT exact"));
          em.record("slice", {{"degree", std::to_string(r.internal_degree)},
                              {"dims", join(r.position_dims)},
                              {"ranks", join(r.ranks)},
                              {"homology", join(r.homology_dims)},
                              {"exact", boolean(r.exact)}});
        }
        for (const auto& e : v.euler) {
          em.text("euler m=" + std::to_string(e.degree) + ": " + std::to_string(e.value) +
                  (e.ok ? " ok" : " FAILS"));
          em.record("euler", {{"degree", std::to_string(e.degree)},
                              {"value", std::to_string(e.value)},
                              {"ok", boolean(e.ok)}});
        }
        const std::string n_str = std::to_string(n);
        em.text("euler_hilbert_up_to_" + n_str + ": " + boolean(v.euler_ok));
        em.text("koszul_up_to_" + n_str + ": " + boolean(v.koszul));
        // exactness forces the Euler identity; a mismatch is an internal failure
        const bool consistent = !v.koszul || v.euler_ok;
        em.record("verdict", {{"up_to", n_str},
                              {"koszul", boolean(v.koszul)},
                              {"euler_ok", boolean(v.euler_ok)},
                              {"consistent", boolean(consistent)}});
        return consistent ? kExitOk : kExitFail;
      },
      a);
}

inline int cmd_ext(Emitter& em, std::size_t n, const AnyPresentation& a) {
  return std::visit(
      [&](const auto& p) {
        GradedAlgebra ga(p);
        GradedAlgebra gd(dual(p));
        auto table = bar_homology(ga, n);
        bool diagonal_ok = true;
        em.text("bar homology of " + p.name() + " over " + p.field().name() +
                " (rows p, columns m = 0.." + std::to_string(n) + ")");
        for (std::size_t row = 0; row <= n; ++row) {
          std::string line = "p=" + std::to_string(row) + ":";
          for (std::size_t m = 0; m <= n; ++m) line += " " + std::to_string(table.at(row, m));
          em.text(line);
        }
        std::vector<std::size_t> diag, dual_dims;
        for (std::size_t m = 0; m <= n; ++m) {
          for (std::size_t row = 0; row <= m; ++row) {
            em.record("bar", {{"p", std::to_string(row)},
                              {"m", std::to_string(m)},
                              {"dim", std::to_string(table.at(row, m))}});
            if (row != m && table.at(row, m) != 0) diagonal_ok = false;
          }
          diag.push_back(table.at(m, m));
          dual_dims.push_back(gd.dim(m));
          if (diag.back() != dual_dims.back()) diagonal_ok = false;
          em.record("diagonal", {{"p", std::to_string(m)},
                                 {"dim", std::to_string(diag.back())},
                                 {"dual_dim", std::to_string(dual_dims.back())}});
        }
        auto kv = koszul_verdict(ga, gd, n);
        const bool agree = kv.koszul == diagonal_ok;
        const std::string n_str = std::to_string(n);
        em.text("diagonal: " + join(diag));
        em.text("dual_dims: " + join(dual_dims));
        em.text("ext_diagonal_up_to_" + n_str + ": " + boolean(diagonal_ok));
        em.text("koszul_up_to_" + n_str + ": " + boolean(kv.koszul));
        em.text(std::string("engines_agree: ") + boolean(agree));
        em.record("verdict", {{"up_to", n_str},
                              {"ext_diagonal", boolean(diagonal_ok)},
                              {"koszul", boolean(kv.koszul)},
                              {"agree", boolean(agree)}});
        return agree ? kExitOk : kExitFail;
      },
      a);
}

template <ExactField F>
int emit_checks(Emitter& em, const std::vector<DiagramCheck<F>>& checks,
                const std::vector<std::string>& skipped) {
  std::size_t pass = 0, fail = 0, info = 0;
  for (const auto& c : checks) {
    std::string status = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    if (c.informational)
      ++info;
    else if (c.passed)
      ++pass;
    else
      ++fail;
    std::string line = status + " " + c.name + " " + objects_label(c);
    if (status != "PASS" && !c.note.empty()) line += " (" + c.note + ")";
    em.text(line);
    em.record("check", {{"name", c.name},
                        {"objects", objects_label(c)},
                        {"status", status},
                        {"residual_zero", boolean(c.residual.is_zero())},
                        {"informational", boolean(c.informational)},
                        {"note", c.note}});
  }
  for (const auto& s : skipped) {
    em.text("SKIP " + s);
    em.record("skip", {{"what", s}});
  }
  em.text("summary: " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
          std::to_string(info) + " informational, " + std::to_string(skipped.size()) +
          " skipped");
  em.record("summary", {{"passed", std::to_string(pass)},
                        {"failed", std::to_string(fail)},
                        {"informational", std::to_string(info)},
                        {"skipped", std::to_string(skipped.size())}});
  return fail == 0 ? kExitOk : kExitFail;
}

template <ExactField F>
std::vector<Presentation<F>> same_field_pool(const std::vector<AnyPresentation>& inputs) {
  std::vector<Presentation<F>> pool;
  for (const auto& a : inputs) {
    if (!std::holds_alternative<Presentation<F>>(a))
      throw FieldMismatch("all files passed to laws must share one field");
    pool.push_back(std::get<Presentation<F>>(a));
    require_same_field(pool.front().field(), pool.back().field());
  }
  return pool;
}

inline int cmd_laws(Emitter& em, const Options& o, const std::vector<AnyPresentation>& inputs) {
  SuiteConfig cfg;
  auto suite = parse_suite(o.suite);
  if (!suite) throw InputError{"usage", "", 0, 0, "unknown suite '" + o.suite + "'"};
  cfg.suite = *suite;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  if (inputs.empty()) {
    // no files: random objects over GF(5)
    PrimeField f(5);
    auto r = run_suite(f, {}, cfg);
    return emit_checks(em, r.checks, r.skipped);
  }
  return std::visit(
      [&](const auto& first) {
        using F = std::decay_t<decltype(first.field())>;
        auto pool = same_field_pool<F>(inputs);
        auto r = run_suite(first.field(), std::move(pool), cfg);
        return emit_checks(em, r.checks, r.skipped);
      },
      inputs.front());
}

inline int cmd_selfdual(Emitter& em, const AnyPresentation& a, const AnyPresentation& partner) {
  return with_pair(a, partner, [&](const auto& x, const auto& y) {
    using F = std::decay_t<decltype(x.field())>;
    std::vector<DiagramCheck<F>> checks;
    checks.push_back(check_double_dual(x));
    for (auto& c : check_unit_duality(x.field())) checks.push_back(std::move(c));
    checks.push_back(check_dual_antimultiplicative(x, y));
    checks.push_back(check_dual_antimultiplicative(y, x));
    const bool self = dual(x).same_algebra(x);
    checks.push_back({"same-relations-as-dual", {x.name()}, self,
                      detail::one_by_one(x.field(), !self),
                      self ? "R equals its annihilator under the dual basis"
                           : "R differs from its annihilator under the dual basis",
                      true});
    sort_checks(checks);
    return emit_checks(em, checks, {});
  });
}

}  // namespace cli

/// Runs the tool on `args` (without the program name). Returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in) {
  using namespace cli;
  Options o;
  CLI::App app{"Exact computations with quadratic algebras", "qcat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output mode")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* dual_cmd = app.add_subcommand("dual", "Print the quadratic dual");
  dual_cmd->add_option("file", o.files, "Presentation file ('-' for stdin)")->required()
      ->expected(1);

  auto* product_cmd = app.add_subcommand("product", "Print a black or white product");
  product_cmd->add_option("--kind", o.kind, "black or white")
      ->check(CLI::IsMember({"black", "white"}));
  product_cmd->add_option("files", o.files, "Two presentation files")->required()->expected(2);

  auto* hom_cmd = app.add_subcommand("hom", "Print the internal Hom object");
  hom_cmd->add_option("files", o.files, "Source and target files")->required()->expected(2);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Graded dimensions in degrees 0..N");
  hilbert_cmd->add_option("--max", o.max_degree, "Top degree N")->check(CLI::Range(1, 64));
  hilbert_cmd->add_option("file", o.files, "Presentation file")->required()->expected(1);

  auto* koszul_cmd = app.add_subcommand("koszul", "Second Koszul complex slices up to N");
  koszul_cmd->add_option("--max", o.max_degree, "Top internal degree N")
      ->check(CLI::Range(1, 64));
  koszul_cmd->add_option("file", o.files, "Presentation file")->required()->expected(1);

  auto* ext_cmd = app.add_subcommand("ext", "Bar complex bidegree table up to N");
  ext_cmd->add_option("--max", o.max_degree, "Top internal degree N")->check(CLI::Range(1, 64));
  ext_cmd->add_option("file", o.files, "Presentation file")->required()->expected(1);

  auto* laws_cmd = app.add_subcommand("laws", "Run a suite of law checks");
  laws_cmd->add_option("--suite", o.suite, "axioms|duality|braiding|hom-algebra|rigid|all")
      ->check(CLI::IsMember({"axioms", "duality", "braiding", "hom-algebra", "rigid", "all"}));
  laws_cmd->add_option("--trials", o.trials, "Randomized trials");
  laws_cmd->add_option("--seed", o.seed, "Random seed");
  laws_cmd->add_option("files", o.files, "Presentation files (none: random GF(5) objects)");

  auto* selfdual_cmd = app.add_subcommand("selfdual-check", "Duality checks on one file");
  selfdual_cmd->add_option("file", o.files, "Presentation file")->required()->expected(1);
  selfdual_cmd->add_option("--partner", o.partner, "Second factor for anti-multiplicativity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0 && o.format == "structured") {
      Emitter em(out, true);
      report_error(em, err, InputError{"usage", "", 0, 0, e.what()});
      return kExitError;
    }
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Emitter em(out, o.format == "structured");
  try {
    std::vector<AnyPresentation> inputs;
    for (const auto& f : o.files) inputs.push_back(load(f, in));
    if (*dual_cmd) return cmd_dual(em, inputs[0]);
    if (*product_cmd) return cmd_product(em, o.kind, inputs[0], inputs[1]);
    if (*hom_cmd) return cmd_hom(em, inputs[0], inputs[1]);
    if (*hilbert_cmd) return cmd_hilbert(em, o.max_degree, inputs[0]);
    if (*koszul_cmd) return cmd_koszul(em, o.max_degree, inputs[0]);
    if (*ext_cmd) return cmd_ext(em, o.max_degree, inputs[0]);
    if (*laws_cmd) return cmd_laws(em, o, inputs);
    if (*selfdual_cmd) {
      auto partner = o.partner.empty() ? inputs[0] : load(o.partner, in);
      return cmd_selfdual(em, inputs[0], partner);
    }
  } catch (const InputError& e) {
    report_error(em, err, e);
    return kExitError;
  } catch (const Error& e) {
    report_error(em, err, InputError{error_kind(e), "", 0, 0, e.what()});
    return kExitError;
  }
  return kExitError;
}

}  // namespace qcat
