#include "curlflow/homotopy.hpp"

#include "curlflow/error.hpp"

namespace curlflow {

namespace {

void accumulate(TimePolynomial& p, int power, const Laurent& c)
{
    if (c.is_zero())
        return;
    Laurent& slot = p[power];
    slot += c;
    if (slot.is_zero())
        p.erase(power);
}

} // namespace

TimeForm pullback_scaling(const DiffForm& w)
{
    if (!w.is_polynomial())
        throw Error(ErrorKind::LaurentNotSupported,
                    "scaling pullback needs polynomial coefficients");
    const int k = w.degree();
    TimeForm out;
    out.degree = k;
    out.spatial.resize(w.components().size());
    out.dt_part.resize(k == 0 ? 0 : component_count(k - 1));

    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < w.components().size(); ++c) {
        auto idx = basis_indices(k, c);
        for (const auto& [m, coeff] : w[c].terms()) {
            const int n = m.degree();
            const Laurent term = Laurent::monomial(m, coeff);
            // dx_i -> t dx_i + x_i dt; keep the all-dx product...
            accumulate(out.spatial[c], n + k, term);
            // ...and every product with exactly one dt, moved to the right.
            for (std::size_t r = 0; r < idx.size(); ++r) {
                rest.clear();
                for (std::size_t j = 0; j < idx.size(); ++j)
                    if (j != r)
                        rest.push_back(idx[j]);
                auto slot = locate_basis(rest);
                const int shift = static_cast<int>(idx.size() - 1 - r);
                const int sign = (shift % 2 == 0 ? 1 : -1) * slot->sign;
                accumulate(out.dt_part[slot->component], n + k - 1,
                           Laurent(sign) * Laurent::variable(idx[r]) * term);
            }
        }
    }
    return out;
}

DiffForm integrate_dt_part(const TimeForm& f)
{
    if (f.degree == 0)
        throw Error(ErrorKind::DegreeUnderflow, "0-forms have no dt part");
    DiffForm out(f.degree - 1);
    const Rational sign = f.degree % 2 == 1 ? 1 : -1;
    for (std::size_t c = 0; c < f.dt_part.size(); ++c)
        for (const auto& [power, coeff] : f.dt_part[c])
            out[c] += Laurent(sign / Rational(power + 1)) * coeff;
    return out;
}

DiffForm homotopy_operator(const DiffForm& w)
{
    if (w.degree() == 0)
        throw Error(ErrorKind::DegreeUnderflow, "homotopy operator needs degree >= 1");
    return integrate_dt_part(pullback_scaling(w));
}

DiffForm homotopy_potential(const DiffForm& w)
{
    if (w.degree() == 0)
        throw Error(ErrorKind::DegreeUnderflow, "homotopy potential needs degree >= 1");
    if (!w.is_polynomial())
        throw Error(ErrorKind::LaurentNotSupported,
                    "homotopy potential needs polynomial coefficients");
    if (w.degree() < 3 && !exterior_derivative(w).is_zero())
        throw Error(ErrorKind::NotClosed, "form is not closed");
    return homotopy_operator(w);
}

} // namespace curlflow
