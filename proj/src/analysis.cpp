#include "curlflow/analysis.hpp"

#include "curlflow/error.hpp"
#include "curlflow/matrix.hpp"

#include <algorithm>
#include <map>

namespace curlflow {

Laurent divergence(const VecField& v)
{
    return v[0].derivative(0) + v[1].derivative(1) + v[2].derivative(2);
}

VecField curl(const VecField& v)
{
    return {{v[2].derivative(1) - v[1].derivative(2),
             v[0].derivative(2) - v[2].derivative(0),
             v[1].derivative(0) - v[0].derivative(1)}};
}

VecField gradient(const Laurent& f)
{
    return {{f.derivative(0), f.derivative(1), f.derivative(2)}};
}

Laurent helicity_density(const VecField& a) { return dot(a, curl(a)); }

Laurent frobenius_obstruction(const VecField& v) { return dot(v, curl(v)); }

ScalarCheck is_first_integral(const VecField& v, const LogFunc& f)
{
    Laurent residual = dot(v, f.gradient()).clear_denominators();
    return {residual.is_zero(), std::move(residual)};
}

ScalarCheck jacobi_identity_check(const VecField& j)
{
    Laurent residual = dot(j, curl(j));
    return {residual.is_zero(), std::move(residual)};
}

bool PoissonMatrix::is_antisymmetric() const
{
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (entries_[r][c] != -entries_[c][r])
                return false;
    return true;
}

VecField PoissonMatrix::apply(const VecField& w) const
{
    VecField out;
    for (std::size_t r = 0; r < 3; ++r)
        out[r] = entries_[r][0] * w[0] + entries_[r][1] * w[1] + entries_[r][2] * w[2];
    return out;
}

PoissonMatrix poisson_matrix(const VecField& j)
{
    return PoissonMatrix({{{Laurent(), -j[2], j[1]},
                           {j[2], Laurent(), -j[0]},
                           {-j[1], j[0], Laurent()}}});
}

VecField hamiltonian_field(const VecField& j, const LogFunc& h) { return cross(j, h.gradient()); }

Laurent nambu_bracket(const LogFunc& f1, const LogFunc& f2, const LogFunc& f3)
{
    return dot(f1.gradient(), cross(f2.gradient(), f3.gradient()));
}

VecField nambu_field(const LogFunc& h1, const LogFunc& h2)
{
    return cross(h1.gradient(), h2.gradient());
}

namespace {

const Laurent& require_invertible(const Laurent& m)
{
    if (!m.is_monomial())
        throw Error(ErrorKind::NonInvertibleMultiplier,
                    "multiplier must be a nonzero rational times a monomial");
    return m;
}

} // namespace

VectorCheck verify_nambu_rep(const VecField& v, const LogFunc& h1, const LogFunc& h2,
                             const Laurent& m)
{
    VecField residual = require_invertible(m) * v - nambu_field(h1, h2);
    return {residual.is_zero(), std::move(residual)};
}

VectorCheck verify_curl_potential(const VecField& v, const VecField& a)
{
    VecField residual = v - curl(a);
    return {residual.is_zero(), std::move(residual)};
}

VecField gauge_transform(const VecField& a, const LogFunc& phi) { return a + phi.gradient(); }

DecompositionReport verify_decomposition(const VecField& v, const DiffForm& j1,
                                         const DiffForm& j2, const Laurent& m)
{
    if (j1.degree() != 1 || j2.degree() != 1)
        throw Error(ErrorKind::InvalidArgument, "decomposition factors must be 1-forms");
    require_invertible(m);
    DecompositionReport r;
    const DiffForm flux = interior_product(v, DiffForm::volume());
    r.residual = (m * wedge(j1, j2) - flux).as_vector();
    r.matches = r.residual.is_zero();
    r.dj1 = exterior_derivative(j1);
    r.dj2 = exterior_derivative(j2);
    r.j1_closed = r.dj1.is_zero();
    r.j2_closed = r.dj2.is_zero();
    r.j1_invariant = interior_product(v, j1)[0].is_zero();
    r.j2_invariant = interior_product(v, j2)[0].is_zero();
    return r;
}

MultiplierReport check_multiplier(const VecField& v, const Laurent& m)
{
    if (m.is_zero())
        throw Error(ErrorKind::InvalidArgument, "multiplier must be nonzero");
    MultiplierReport r;
    r.multiplier = m;
    r.divergence_residual = divergence(m * v);
    r.verdict = r.divergence_residual.is_zero();
    return r;
}

std::vector<Laurent> search_monomial_multiplier(const VecField& v, int bound)
{
    if (bound < 0 || bound > kMaxMultiplierBound)
        throw Error(ErrorKind::BoundTooLarge, "multiplier exponent bound must lie in [0, 6]");
    std::vector<Laurent> found;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c) {
                Laurent m = Laurent::monomial(Monomial{{a, b, c}});
                if (check_multiplier(v, m).verdict)
                    found.push_back(std::move(m));
            }
    std::sort(found.begin(), found.end(), [](const Laurent& x, const Laurent& y) {
        return GradedLexOrder{}(x.terms().begin()->first, y.terms().begin()->first);
    });
    return found;
}

std::vector<LogFunc> find_polynomial_integrals(const VecField& v, int dmax, bool use_logs)
{
    if (dmax < 1 || dmax > kMaxAnsatzDegree)
        throw Error(ErrorKind::BoundTooLarge, "ansatz degree must lie in [1, 6]");

    std::vector<LogFunc> ansatz;
    for (int d = dmax; d >= 1; --d)
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b)
                ansatz.emplace_back(Laurent::monomial(Monomial{{a, b, d - a - b}}));
    if (use_logs)
        for (std::size_t i = 0; i < kVariables; ++i)
            ansatz.push_back(LogFunc::log_of(i));

    // One row per monomial of v . grad(ansatz_j); coefficients collected exactly.
    std::map<Monomial, std::size_t, GradedLexOrder> row_of;
    std::vector<Laurent> images;
    images.reserve(ansatz.size());
    for (const auto& f : ansatz) {
        images.push_back(dot(v, f.gradient()));
        for (const auto& [m, c] : images.back().terms())
            row_of.try_emplace(m, row_of.size());
    }
    RationalMatrix system(row_of.size(), ansatz.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [m, c] : images[j].terms())
            system(row_of.at(m), j) = c;

    std::vector<LogFunc> integrals;
    for (const auto& n : exact_nullspace(system)) {
        LogFunc f;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (n[j] != 0)
                f += n[j] * ansatz[j];
        integrals.push_back(std::move(f));
    }
    return integrals;
}

VecField field_from_one_form(const VecField& eta)
{
    return {{-eta[1].derivative(2) + eta[2].derivative(1),
             -eta[2].derivative(0) + eta[0].derivative(2),
             -eta[0].derivative(1) + eta[1].derivative(0)}};
}

BiHamiltonianPair bihamiltonian_pair(const LogFunc& f, const LogFunc& h, const Laurent& m)
{
    const Laurent inv = *require_invertible(m).inverse();
    const VecField j1 = inv * f.gradient();
    const VecField j2 = -(inv * h.gradient());
    return {poisson_matrix(j1), poisson_matrix(j2), hamiltonian_field(j1, h)};
}

} // namespace curlflow
