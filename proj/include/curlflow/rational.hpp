#pragma once

#include <gmpxx.h>

#include <string>

namespace curlflow {

/// Exact rational in lowest terms with positive denominator (GMP backed).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace curlflow
