#pragma once

// Seeded generators for property tests.

#include "curlflow/forms.hpp"
#include "curlflow/logfunc.hpp"
#include "curlflow/matrix.hpp"

#include <random>

namespace curlflow::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 5)
    {
        int num = 0;
        while (num == 0)
            num = integer(-span, span);
        return make_rational(num, integer(1, 4));
    }

    Monomial monomial(int lo, int hi)
    {
        return Monomial{{integer(lo, hi), integer(lo, hi), integer(lo, hi)}};
    }

    /// Random Laurent polynomial with exponents in [lo, hi].
    Laurent laurent(int max_terms = 4, int lo = -2, int hi = 3)
    {
        Laurent f;
        const int n = integer(0, max_terms);
        for (int i = 0; i < n; ++i)
            f += Laurent::monomial(monomial(lo, hi), rational());
        return f;
    }

    /// Random polynomial of total degree <= degree.
    Laurent polynomial(int degree, int max_terms = 4)
    {
        Laurent f;
        const int n = integer(1, max_terms);
        for (int i = 0; i < n; ++i) {
            const int a = integer(0, degree);
            const int b = integer(0, degree - a);
            const int c = integer(0, degree - a - b);
            f += Laurent::monomial(Monomial{{a, b, c}}, rational());
        }
        return f;
    }

    /// Nonzero polynomial of total degree <= degree.
    Laurent nonzero_polynomial(int degree, int max_terms = 4)
    {
        Laurent f;
        while (f.is_zero())
            f = polynomial(degree, max_terms);
        return f;
    }

    LogFunc logfunc(bool with_logs = true)
    {
        LogFunc f(laurent(4, -1, 3));
        if (with_logs)
            for (std::size_t i = 0; i < kVariables; ++i)
                if (integer(0, 2) == 0)
                    f += LogFunc::log_of(i, rational());
        return f;
    }

    VecField vecfield(int degree = 3)
    {
        return {{polynomial(degree), polynomial(degree), polynomial(degree)}};
    }

    VecField laurent_vecfield() { return {{laurent(), laurent(), laurent()}}; }

    DiffForm polynomial_form(int degree, int poly_degree = 3)
    {
        DiffForm w(degree);
        for (std::size_t i = 0; i < w.components().size(); ++i)
            w[i] = polynomial(poly_degree);
        return w;
    }

    DiffForm laurent_form(int degree)
    {
        DiffForm w(degree);
        for (std::size_t i = 0; i < w.components().size(); ++i)
            w[i] = laurent(3);
        return w;
    }

    RationalMatrix matrix(std::size_t rows, std::size_t cols, int zero_bias = 2)
    {
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = integer(0, zero_bias) == 0 ? rational(7) : Rational(0);
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace curlflow::testing
