#pragma once

#include "curlflow/laurent.hpp"
#include "curlflow/vecfield.hpp"

#include <map>

namespace curlflow {

/// Laurent polynomial plus rational multiples of ln(x_i).
///
/// This is the class of Hamiltonians and first integrals handled by the
/// toolkit; its gradient always has Laurent components.
class LogFunc {
public:
    using LogTerms = std::map<std::size_t, Rational>;

    LogFunc() = default;
    LogFunc(Laurent poly) : poly_(std::move(poly)) {}
    LogFunc(Laurent poly, const LogTerms& logs);

    static LogFunc log_of(std::size_t var, const Rational& coeff = 1);

    const Laurent& poly() const { return poly_; }
    const LogTerms& logs() const { return logs_; }
    bool has_logs() const { return !logs_.empty(); }
    bool is_zero() const { return poly_.is_zero() && logs_.empty(); }

    Laurent partial(std::size_t var) const;
    VecField gradient() const;

    /// Natural logs require a strictly positive coordinate.
    double evaluate(std::span<const double, kVariables> point) const;

    LogFunc operator-() const;
    LogFunc& operator+=(const LogFunc& rhs);
    LogFunc& operator-=(const LogFunc& rhs);
    friend LogFunc operator+(LogFunc a, const LogFunc& b) { return a += b; }
    friend LogFunc operator-(LogFunc a, const LogFunc& b) { return a -= b; }
    friend LogFunc operator*(const Rational& s, const LogFunc& f);

    friend bool operator==(const LogFunc&, const LogFunc&) = default;

private:
    void add_log(std::size_t var, const Rational& c);

    Laurent poly_;
    LogTerms logs_;
};

inline Laurent partial_derivative(const LogFunc& f, std::size_t var) { return f.partial(var); }
inline VecField gradient(const LogFunc& f) { return f.gradient(); }

} // namespace curlflow
