#pragma once

#include "curlflow/forms.hpp"
#include "curlflow/logfunc.hpp"
#include "curlflow/vecfield.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curlflow {

enum class ParseErrorKind {
    Syntax,
    NonMonomialDenominator,
    UnknownIdentifier,
    NonIntegerExponent,
    LogOfNonVariable,
    WrongArity,
};

std::string_view to_string(ParseErrorKind kind);

/// Positioned parse failure; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, int column, const std::string& message);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    int line_;
    int column_;
};

using Variables = std::array<std::string, kVariables>;
using Params = std::map<std::string, Rational>;

/// Source position of the first character of an embedded expression.
struct SourceOffset {
    int line = 1;
    int column = 1;
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" ["-"] integer)?
///   base   := integer | identifier | "ln" "(" identifier ")" | "(" expr ")" | "-" factor
/// Parameters are substituted as rationals. "^" binds tighter than unary minus.
LogFunc parse_expression(std::string_view src, const Variables& variables,
                         const Params& params = {}, SourceOffset offset = {});

/// Canonical text; parse_expression(render(f)) == f.
std::string render(const LogFunc& f, const Variables& variables);
std::string render(const Laurent& f, const Variables& variables);

struct Decomposition {
    std::string label;
    DiffForm first{1};
    DiffForm second{1};
};

enum class Expectation { Pass, Fail };

/// A parsed system-definition file.
struct SystemDef {
    std::string name;
    Variables variables;
    Params params;
    VecField field;                   // always set; curl(potential) when derived
    bool field_from_potential = false;
    std::optional<VecField> potential;
    std::optional<VecField> claimed_potential; // candidate checked against the field
    std::vector<LogFunc> integrals;
    std::optional<Laurent> multiplier;        // M with M v = grad H1 x grad H2
    std::optional<VecField> one_form;         // Hamiltonian one-form coefficients
    std::vector<Decomposition> decompositions;
    Expectation expect = Expectation::Pass;
};

/// `overrides` replace the values of parameters declared in [params].
SystemDef parse_system(std::string_view src, const Params& overrides = {});

} // namespace curlflow
