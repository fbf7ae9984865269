#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace poim {

/// Attribute kinds. The enumerator order is the first key of the canonical
/// term order, so iris sort before literals, blanks and variables.
enum class TermKind { Iri, Literal, Blank, Variable };

/// An attribute: a resource identifier (IRI or literal), a blank or a
/// variable. Immutable value type; equality and ordering are structural,
/// literals compare by lexical form with no value-space normalization.
class Term {
public:
    Term() = default;

    static Term iri(std::string value) {
        return Term(TermKind::Iri, std::move(value), std::nullopt, std::nullopt);
    }
    static Term literal(std::string lexical) {
        return Term(TermKind::Literal, std::move(lexical), std::nullopt, std::nullopt);
    }
    static Term typedLiteral(std::string lexical, std::string datatypeIri) {
        return Term(TermKind::Literal, std::move(lexical), std::move(datatypeIri), std::nullopt);
    }
    static Term langLiteral(std::string lexical, std::string languageTag) {
        return Term(TermKind::Literal, std::move(lexical), std::nullopt, std::move(languageTag));
    }
    static Term blank(std::string label) {
        return Term(TermKind::Blank, std::move(label), std::nullopt, std::nullopt);
    }
    static Term variable(std::string name) {
        return Term(TermKind::Variable, std::move(name), std::nullopt, std::nullopt);
    }

    TermKind kind() const { return kind_; }

    /// The IRI string, the literal lexical form, or the blank/variable name.
    const std::string& lexical() const { return lexical_; }
    const std::optional<std::string>& datatype() const { return datatype_; }
    const std::optional<std::string>& language() const { return language_; }

    /// True for IRIs and literals, the globally scoped resource identifiers.
    bool isIdentifier() const { return kind_ == TermKind::Iri || kind_ == TermKind::Literal; }
    bool isIri() const { return kind_ == TermKind::Iri; }
    bool isLiteral() const { return kind_ == TermKind::Literal; }
    bool isBlank() const { return kind_ == TermKind::Blank; }
    bool isVariable() const { return kind_ == TermKind::Variable; }

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string lexical, std::optional<std::string> datatype,
         std::optional<std::string> language)
        : kind_(kind),
          lexical_(std::move(lexical)),
          datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    // Member order defines the canonical term order via the defaulted <=>.
    TermKind kind_ = TermKind::Iri;
    std::string lexical_;
    std::optional<std::string> datatype_;
    std::optional<std::string> language_;
};

} // namespace poim
