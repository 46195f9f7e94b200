#pragma once

#include "curlflow/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>

namespace curlflow {

inline constexpr std::size_t kVariables = 3;

/// Exponent vector x^a y^b z^c; exponents may be negative.
struct Monomial {
    std::array<int, kVariables> exponents{};

    int degree() const { return exponents[0] + exponents[1] + exponents[2]; }
    bool is_polynomial() const
    {
        return exponents[0] >= 0 && exponents[1] >= 0 && exponents[2] >= 0;
    }

    Monomial operator*(const Monomial& other) const;
    Monomial inverse() const;

    static Monomial unit(std::size_t var, int power = 1);

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order, higher total degree first, ties broken by descending
/// lexicographic comparison of exponent vectors.
struct GradedLexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate Laurent polynomial in three variables over the rationals.
///
/// Stored terms are always nonzero and iterated in graded-lex order, so two
/// Laurent values are equal exactly when their term maps are equal.
class Laurent {
public:
    using Terms = std::map<Monomial, Rational, GradedLexOrder>;

    Laurent() = default;
    Laurent(const Rational& constant);
    Laurent(long constant) : Laurent(Rational(constant)) {}

    static Laurent variable(std::size_t var);
    static Laurent monomial(const Monomial& m, const Rational& coeff = 1);
    /// Builds from arbitrary (possibly zero / duplicate) terms.
    static Laurent from_terms(std::span<const std::pair<Monomial, Rational>> terms);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Single nonzero term: the invertible elements of the ring.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;
    Rational constant_term() const;
    /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
    int min_exponent(std::size_t var) const;
    int max_degree() const;

    std::optional<Laurent> inverse() const;
    Laurent pow(int n) const;
    Laurent derivative(std::size_t var) const;
    /// Multiplies by the smallest monomial that removes every negative exponent.
    Laurent clear_denominators() const;
    /// Terms of total degree `d` only.
    Laurent homogeneous_part(int d) const;

    Rational evaluate(std::span<const Rational, kVariables> point) const;
    double evaluate(std::span<const double, kVariables> point) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& rhs);
    Laurent& operator-=(const Laurent& rhs);
    Laurent& operator*=(const Laurent& rhs);

    friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
    friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
    friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

} // namespace curlflow
