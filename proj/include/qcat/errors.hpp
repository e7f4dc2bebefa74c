#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different ground fields (Q vs GF(p), or GF(p) vs GF(q)).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Shapes or ambient dimensions do not fit together.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A linear map failed the relation-containment condition (h (x) h)(R) in R'.
class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

/// The object is required to lie in the rigid subcategory (full relations).
class NotRigid : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

/// Presentation-file syntax error with a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string kind, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        kind_(std::move(kind)),
        detail_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string kind_;
  std::string detail_;
};

}  // namespace qcat
