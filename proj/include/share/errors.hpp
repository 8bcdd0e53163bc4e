#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace share {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed document or query text. `line`/`column` are 1-based; column 0
/// means "whole line" (used by the line-oriented N-Triples parser).
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& reason)
      : Error(format(line, column, reason)), line_(line), column_(column), reason_(reason) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

private:
  static std::string format(std::size_t line, std::size_t column, const std::string& reason) {
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return "syntax error at " + where + ": " + reason;
  }

  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

/// Valid SPARQL, but outside the supported subset (OPTIONAL, FILTER, ...).
class UnsupportedFeature : public Error {
public:
  explicit UnsupportedFeature(const std::string& name)
      : Error("unsupported SPARQL feature: " + name), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// A service descriptor that violates its invariants (empty predicate set,
/// malformed endpoint URL, missing interface classes).
class InvalidDescriptor : public Error {
public:
  explicit InvalidDescriptor(const std::string& reason) : Error("invalid service descriptor: " + reason) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& message) : Error(message) {}
};

/// A persisted registry/ontology file that does not match the schema.
class FormatError : public Error {
public:
  FormatError(const std::string& field, const std::string& reason)
      : Error("format error (" + field + "): " + reason), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

class UndefinedClass : public Error {
public:
  explicit UndefinedClass(const std::string& iri)
      : Error("undefined class: <" + iri + ">"), iri_(iri) {}
  const std::string& iri() const { return iri_; }

private:
  std::string iri_;
};

class CyclicDefinition : public Error {
public:
  explicit CyclicDefinition(const std::string& path) : Error("cyclic class definition: " + path) {}
};

/// An ontology construct outside the supported set (someValuesFrom, ...).
class UnsupportedConstruct : public Error {
public:
  explicit UnsupportedConstruct(const std::string& name)
      : Error("unsupported ontology construct: " + name), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// A pattern that no service can feed and the local store cannot answer.
class UnresolvablePattern : public Error {
public:
  explicit UnresolvablePattern(const std::string& pattern_text)
      : Error("unresolvable pattern: " + pattern_text), pattern_(pattern_text) {}
  const std::string& pattern() const { return pattern_; }

private:
  std::string pattern_;
};

/// The per-query service-call budget was exhausted.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("service-call budget exceeded (" + std::to_string(budget) + " calls)") {}
};

class BindError : public Error {
public:
  explicit BindError(const std::string& message) : Error(message) {}
};

}  // namespace share
