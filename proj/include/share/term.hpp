#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace share {

namespace rdf {
inline constexpr std::string_view kNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
}  // namespace rdf

enum class TermKind : std::uint8_t { Iri, Literal, Variable };

/// An RDF term: an IRI, a literal (lexical form plus optional datatype IRI),
/// or a query variable. Variables only ever occur inside triple patterns,
/// never inside a graph.
class Term {
public:
  static Term iri(std::string value) {
    if (value.empty()) throw std::invalid_argument("IRI must be non-empty");
    for (char c : value) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw std::invalid_argument("IRI must not contain whitespace: " + value);
    }
    return Term(TermKind::Iri, std::move(value), "");
  }

  static Term literal(std::string lexical, std::string datatype = "") {
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype));
  }

  static Term variable(std::string name) {
    if (name.empty()) throw std::invalid_argument("variable name must be non-empty");
    return Term(TermKind::Variable, std::move(name), "");
  }

  TermKind kind() const { return kind_; }
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }

  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_literal() const { return kind_ == TermKind::Literal; }
  bool is_variable() const { return kind_ == TermKind::Variable; }

  /// N-Triples style rendering: <iri>, "literal"^^<dt>, ?var.
  std::string text() const;

  auto operator<=>(const Term&) const = default;

private:
  Term(TermKind kind, std::string value, std::string datatype)
      : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
};

/// An RDF statement. Subject and predicate are IRIs; the object is an IRI or
/// a literal. Variables are rejected at construction.
class Triple {
public:
  Triple(Term subject, Term predicate, Term object)
      : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
    if (!subject_.is_iri()) throw std::invalid_argument("triple subject must be an IRI");
    if (!predicate_.is_iri()) throw std::invalid_argument("triple predicate must be an IRI");
    if (object_.is_variable()) throw std::invalid_argument("triple object must not be a variable");
  }

  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }
  const Term& object() const { return object_; }

  std::string text() const;

  auto operator<=>(const Triple&) const = default;

private:
  Term subject_;
  Term predicate_;
  Term object_;
};

/// Escape a literal lexical form for N-Triples output.
std::string escape_literal(std::string_view lexical);

}  // namespace share
