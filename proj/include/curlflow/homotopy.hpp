#pragma once

#include "curlflow/forms.hpp"

#include <map>
#include <vector>

namespace curlflow {

/// Polynomial in t with Laurent coefficients, keyed by the power of t.
using TimePolynomial = std::map<int, Laurent>;

/// A form on R^3 x [0,1] split uniquely as  spatial + dt_part ^ dt.
struct TimeForm {
    int degree = 0;
    std::vector<TimePolynomial> spatial; // component layout of a degree-`degree` form
    std::vector<TimePolynomial> dt_part; // component layout of a degree-(`degree`-1) form
};

/// Pullback along the scaling homotopy (x, t) -> t x.
///
/// Requires polynomial coefficients; otherwise the t-integral of the dt part
/// is not a polynomial integral.
TimeForm pullback_scaling(const DiffForm& w);

/// (-1)^(k-1) * integral over [0,1] of the dt part.
DiffForm integrate_dt_part(const TimeForm& f);

/// Composite homotopy operator D_k o F^*, defined for any polynomial form of
/// degree >= 1. It satisfies d(Hw) + H(dw) = w.
DiffForm homotopy_operator(const DiffForm& w);

/// A primitive of a closed polynomial form: exterior_derivative(result) == w.
DiffForm homotopy_potential(const DiffForm& w);

} // namespace curlflow
