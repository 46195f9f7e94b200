#include "curlflow/laurent.hpp"

#include "curlflow/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curlflow {

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kVariables; ++i)
        r.exponents[i] = exponents[i] + other.exponents[i];
    return r;
}

Monomial Monomial::inverse() const
{
    Monomial r;
    for (std::size_t i = 0; i < kVariables; ++i)
        r.exponents[i] = -exponents[i];
    return r;
}

Monomial Monomial::unit(std::size_t var, int power)
{
    Monomial m;
    m.exponents.at(var) = power;
    return m;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const int da = a.degree();
    const int db = b.degree();
    if (da != db)
        return da > db;
    return a.exponents > b.exponents;
}

Laurent::Laurent(const Rational& constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Laurent Laurent::variable(std::size_t var) { return monomial(Monomial::unit(var)); }

Laurent Laurent::monomial(const Monomial& m, const Rational& coeff)
{
    Laurent r;
    if (coeff != 0)
        r.terms_.emplace(m, coeff);
    return r;
}

Laurent Laurent::from_terms(std::span<const std::pair<Monomial, Rational>> terms)
{
    Laurent r;
    for (const auto& [m, c] : terms)
        r.add_term(m, c);
    return r;
}

void Laurent::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool Laurent::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool Laurent::is_polynomial() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_polynomial(); });
}

Rational Laurent::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Laurent::min_exponent(std::size_t var) const
{
    if (terms_.empty())
        return 0;
    int lo = terms_.begin()->first.exponents.at(var);
    for (const auto& [m, c] : terms_)
        lo = std::min(lo, m.exponents[var]);
    return lo;
}

int Laurent::max_degree() const
{
    // graded order puts the highest degree first
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::optional<Laurent> Laurent::inverse() const
{
    if (!is_monomial())
        return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    return monomial(m.inverse(), 1 / c);
}

Laurent Laurent::pow(int n) const
{
    if (n < 0) {
        auto inv = inverse();
        if (!inv)
            throw Error(ErrorKind::NonInvertibleMultiplier,
                        "negative power of a non-monomial Laurent polynomial");
        return inv->pow(-n);
    }
    Laurent result(1);
    Laurent base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

Laurent Laurent::derivative(std::size_t var) const
{
    Laurent r;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponents.at(var);
        if (e == 0)
            continue;
        Monomial dm = m;
        dm.exponents[var] -= 1;
        r.add_term(dm, c * e);
    }
    return r;
}

Laurent Laurent::clear_denominators() const
{
    Monomial shift;
    for (std::size_t i = 0; i < kVariables; ++i)
        shift.exponents[i] = std::max(0, -min_exponent(i));
    return *this * monomial(shift);
}

Laurent Laurent::homogeneous_part(int d) const
{
    Laurent r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            r.terms_.emplace(m, c);
    return r;
}

Rational Laurent::evaluate(std::span<const Rational, kVariables> point) const
{
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < kVariables; ++i) {
            const int e = m.exponents[i];
            if (e == 0)
                continue;
            if (e < 0 && point[i] == 0)
                throw Error(ErrorKind::PoleAtPoint,
                            "negative exponent at zero coordinate " + std::to_string(i));
            Rational p = 1;
            for (int k = 0; k < std::abs(e); ++k)
                p *= point[i];
            term *= e < 0 ? Rational(1 / p) : p;
        }
        sum += term;
    }
    return sum;
}

double Laurent::evaluate(std::span<const double, kVariables> point) const
{
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < kVariables; ++i) {
            const int e = m.exponents[i];
            if (e == 0)
                continue;
            if (e < 0 && point[i] == 0.0)
                throw Error(ErrorKind::PoleAtPoint,
                            "negative exponent at zero coordinate " + std::to_string(i));
            term *= std::pow(point[i], e);
        }
        sum += term;
    }
    return sum;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& rhs)
{
    *this = *this * rhs;
    return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs)
{
    Laurent r;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

} // namespace curlflow
