#pragma once

/**
 * @file io.hpp
 * @brief The line-oriented presentation file format.
 *
 *   field Q            | field GF <p>
 *   algebra <name>
 *   gens <id> <id> ...
 *   rel [<coeff>*]<id>*<id> (+|- [<coeff>*]<id>*<id>)*
 *
 * Blank lines and text after '#' are ignored. Identifiers start with a
 * letter or underscore and may contain letters, digits, '_', '!', '\'', '.'
 * and any non-ASCII byte, so product labels such as x⊗y round-trip.
 * Coefficients are integers or fractions a/b. unparse writes the canonical
 * (reduced row-echelon) basis, one rel line per basis row.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "qcat/errors.hpp"
#include "qcat/field.hpp"
#include "qcat/presentation.hpp"

namespace qcat {

using AnyPresentation = std::variant<Presentation<Rationals>, Presentation<PrimeField>>;

namespace detail {

inline bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }

inline bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '!' || c == '\'' || c == '.' || c >= 0x80;
}

inline bool valid_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(static_cast<unsigned char>(s[0]))) return false;
  for (unsigned char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

/// Cursor over one line; columns are 1-based byte offsets.
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }
  void advance() { ++pos_; }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && is_ident_start(static_cast<unsigned char>(text_[pos_])))
      while (pos_ < text_.size() && is_ident_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(std::size_t column, const std::string& kind, const std::string& msg) const {
    throw ParseError(line_, column, kind, msg);
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Term {
  mpz_class num = 1, den = 1;
  std::size_t first = 0, second = 0;
  std::size_t column = 0;
};

inline std::vector<Term> parse_relation(LineScanner& sc,
                                        const std::map<std::string, std::size_t>& gens) {
  std::vector<Term> terms;
  bool first_term = true;
  while (!sc.at_end()) {
    Term t;
    t.column = sc.column();
    bool negative = false;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      sc.advance();
    } else if (!first_term) {
      sc.fail(sc.column(), "syntax", "expected '+' or '-' between terms");
    }
    first_term = false;

    std::vector<std::pair<std::size_t, std::size_t>> letters;  // (index, column)
    bool have_coeff = false;
    for (;;) {
      const std::size_t col = sc.column();
      if (sc.at_end()) sc.fail(col, "syntax", "expected a coefficient or generator");
      char d = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(d))) {
        if (have_coeff || !letters.empty())
          sc.fail(col, "syntax", "a coefficient may only start a term");
        std::string num = sc.digits();
        std::string den = "1";
        if (sc.peek() == '/') {
          sc.advance();
          den = sc.digits();
          if (den.empty()) sc.fail(sc.column(), "syntax", "expected a denominator after '/'");
        }
        t.num = mpz_class(num);
        t.den = mpz_class(den);
        if (t.den == 0) sc.fail(col, "syntax", "zero denominator");
        have_coeff = true;
      } else {
        std::string id = sc.identifier();
        if (id.empty()) sc.fail(col, "syntax", std::string("unexpected character '") + d + "'");
        auto it = gens.find(id);
        if (it == gens.end()) sc.fail(col, "unknown-generator", "unknown generator '" + id + "'");
        letters.emplace_back(it->second, col);
      }
      if (sc.peek() != '*') break;
      sc.advance();
    }
    if (letters.size() != 2) {
      const std::size_t col = letters.size() > 2 ? letters[2].second : t.column;
      sc.fail(col, "non-quadratic", "word of degree " + std::to_string(letters.size()) +
                                        "; relations must be quadratic");
    }
    if (negative) t.num = -t.num;
    t.first = letters[0].first;
    t.second = letters[1].first;
    terms.push_back(std::move(t));
  }
  if (terms.empty()) sc.fail(sc.column(), "syntax", "empty relation");
  return terms;
}

struct RawFile {
  std::optional<std::uint64_t> modulus;  // unset: Q
  bool have_field = false;
  std::string name;
  std::vector<std::string> gens;
  std::vector<std::pair<std::size_t, std::vector<Term>>> rels;  // (line, terms)
};

inline RawFile scan_file(std::string_view text) {
  RawFile raw;
  std::map<std::string, std::size_t> index;
  bool have_name = false, have_gens = false;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    const std::size_t kcol = sc.column();
    std::string keyword = sc.word();
    if (keyword == "field") {
      if (raw.have_field) sc.fail(kcol, "duplicate", "duplicate field line");
      const std::size_t col = sc.column();
      std::string kind = sc.word();
      if (kind == "Q") {
        raw.have_field = true;
      } else if (kind == "GF") {
        const std::size_t pcol = sc.column();
        std::string p = sc.digits();
        if (p.empty()) sc.fail(pcol, "syntax", "expected a modulus after GF");
        if (p.size() > 10 || !is_prime(std::stoull(p)) || std::stoull(p) >= (1ull << 31))
          sc.fail(pcol, "non-prime-modulus", "modulus " + p + " is not a prime below 2^31");
        raw.modulus = std::stoull(p);
        raw.have_field = true;
      } else {
        sc.fail(col, "syntax", "expected 'Q' or 'GF <p>' after field");
      }
    } else if (keyword == "algebra") {
      if (have_name) sc.fail(kcol, "duplicate", "duplicate algebra line");
      const std::size_t col = sc.column();
      raw.name = sc.word();
      if (raw.name.empty()) sc.fail(col, "syntax", "missing algebra name");
      have_name = true;
    } else if (keyword == "gens") {
      if (have_gens) sc.fail(kcol, "duplicate", "duplicate gens line");
      have_gens = true;
      while (!sc.at_end()) {
        const std::size_t col = sc.column();
        std::string id = sc.word();
        if (!valid_identifier(id)) sc.fail(col, "syntax", "invalid generator name '" + id + "'");
        if (index.count(id)) sc.fail(col, "duplicate", "duplicate generator '" + id + "'");
        index.emplace(id, raw.gens.size());
        raw.gens.push_back(id);
      }
      if (raw.gens.empty()) sc.fail(kcol, "empty-generators", "empty generator list");
    } else if (keyword == "rel") {
      if (!have_gens) sc.fail(kcol, "syntax", "rel line before the gens line");
      raw.rels.emplace_back(line_no, parse_relation(sc, index));
      continue;
    } else {
      sc.fail(kcol, "syntax", "unknown keyword '" + keyword + "'");
    }
    if (!sc.at_end()) sc.fail(sc.column(), "syntax", "unexpected trailing text");
  }
  const std::size_t eof = line_no;
  if (!raw.have_field) throw ParseError(eof, 1, "missing", "missing field line");
  if (!have_name) throw ParseError(eof, 1, "missing", "missing algebra line");
  if (!have_gens) throw ParseError(eof, 1, "empty-generators", "missing gens line");
  return raw;
}

template <ExactField F>
Presentation<F> assemble(const F& f, const RawFile& raw) {
  const std::size_t n = raw.gens.size();
  Matrix<F> rows(f, raw.rels.size(), n * n);
  for (std::size_t i = 0; i < raw.rels.size(); ++i)
    for (const auto& t : raw.rels[i].second) {
      typename F::Element c;
      try {
        c = f.from_fraction(t.num, t.den);
      } catch (const InvalidField& e) {
        throw ParseError(raw.rels[i].first, t.column, "coefficient", e.what());
      }
      auto& cell = rows(i, t.first * n + t.second);
      cell = f.add(cell, c);
    }
  return {f, raw.name, raw.gens, Subspace<F>::span(rows)};
}

}  // namespace detail

/// Parses a presentation file; throws ParseError with the offending position.
inline AnyPresentation parse(std::string_view text) {
  auto raw = detail::scan_file(text);
  if (raw.modulus) return detail::assemble(PrimeField(*raw.modulus), raw);
  return detail::assemble(Rationals(), raw);
}

inline std::string field_line(const Rationals&) { return "field Q"; }
inline std::string field_line(const PrimeField& f) {
  return "field GF " + std::to_string(f.modulus());
}

/// One canonical relation row as "c*x*y + ..." (no leading keyword).
template <ExactField F>
std::string relation_text(const Presentation<F>& a, const SparseVector<F>& row) {
  const F& f = a.field();
  const std::size_t n = a.gens();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : row) {
    std::string coeff = f.to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (coeff != "1") out += coeff + "*";
    out += a.labels()[w / n] + "*" + a.labels()[w % n];
    first = false;
  }
  return out;
}

/// Canonical text: one rel line per RREF basis row, terms in word order.
template <ExactField F>
std::string unparse(const Presentation<F>& a) {
  std::string out = field_line(a.field()) + "\nalgebra " + a.name() + "\ngens";
  for (const auto& l : a.labels()) out += " " + l;
  out += "\n";
  for (const auto& row : a.relations().rows()) out += "rel " + relation_text(a, row) + "\n";
  return out;
}

inline std::string unparse(const AnyPresentation& a) {
  return std::visit([](const auto& p) { return unparse(p); }, a);
}

}  // namespace qcat
