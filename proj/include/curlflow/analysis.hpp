#pragma once

#include "curlflow/forms.hpp"
#include "curlflow/logfunc.hpp"
#include "curlflow/vecfield.hpp"

#include <array>
#include <vector>

namespace curlflow {

// Vector calculus on R^3 ---------------------------------------------------

Laurent divergence(const VecField& v);
VecField curl(const VecField& v);
VecField gradient(const Laurent& f);
/// a . curl(a)
Laurent helicity_density(const VecField& a);
/// v . curl(v); scales as mu^2 under v -> mu v.
Laurent frobenius_obstruction(const VecField& v);

struct ScalarCheck {
    bool holds = false;
    Laurent residual;
};

struct VectorCheck {
    bool holds = false;
    VecField residual;
};

/// v . grad f with monomial denominators cleared.
ScalarCheck is_first_integral(const VecField& v, const LogFunc& f);

/// j . curl(j) == 0, the Jacobi identity for a Poisson vector.
ScalarCheck jacobi_identity_check(const VecField& j);

// Poisson and Nambu structures ---------------------------------------------

/// Antisymmetric 3x3 matrix with P w = j x w.
class PoissonMatrix {
public:
    using Entries = std::array<std::array<Laurent, 3>, 3>;

    PoissonMatrix() = default;
    explicit PoissonMatrix(Entries entries) : entries_(std::move(entries)) {}

    const Laurent& operator()(std::size_t r, std::size_t c) const { return entries_.at(r).at(c); }
    const Entries& entries() const { return entries_; }
    bool is_antisymmetric() const;
    VecField apply(const VecField& w) const;

    friend bool operator==(const PoissonMatrix&, const PoissonMatrix&) = default;

private:
    Entries entries_{};
};

PoissonMatrix poisson_matrix(const VecField& j);

/// j x grad h
VecField hamiltonian_field(const VecField& j, const LogFunc& h);

/// grad f1 . (grad f2 x grad f3)
Laurent nambu_bracket(const LogFunc& f1, const LogFunc& f2, const LogFunc& f3);

/// grad h1 x grad h2
VecField nambu_field(const LogFunc& h1, const LogFunc& h2);

/// m v == grad h1 x grad h2, with m invertible (the Jacobi last multiplier M).
VectorCheck verify_nambu_rep(const VecField& v, const LogFunc& h1, const LogFunc& h2,
                             const Laurent& m);

/// v == curl(a)
VectorCheck verify_curl_potential(const VecField& v, const VecField& a);

VecField gauge_transform(const VecField& a, const LogFunc& phi);

struct DecompositionReport {
    bool matches = false;
    VecField residual;     // m (j1 ^ j2) - i_v(vol), as 2-form components
    DiffForm dj1{2};
    DiffForm dj2{2};
    bool j1_closed = false;
    bool j2_closed = false;
    bool j1_invariant = false; // i_v j1 == 0
    bool j2_invariant = false;
};

/// Checks i_v(dx^dy^dz) == m (j1 ^ j2) and reports closedness/invariance of j1, j2.
DecompositionReport verify_decomposition(const VecField& v, const DiffForm& j1,
                                         const DiffForm& j2, const Laurent& m);

// Multipliers and first integrals ------------------------------------------

struct MultiplierReport {
    Laurent multiplier;
    Laurent divergence_residual;
    bool verdict = false;
};

MultiplierReport check_multiplier(const VecField& v, const Laurent& m);

inline constexpr int kMaxMultiplierBound = 6;
inline constexpr int kMaxAnsatzDegree = 6;

/// All monomials x^a y^b z^c, |a|,|b|,|c| <= bound, with div(m v) == 0.
std::vector<Laurent> search_monomial_multiplier(const VecField& v, int bound);

/// Nullspace basis of the ansatz  sum c_m x^m (+ sum c_i ln x_i),
/// 0 < |m| <= dmax, under v . grad I == 0.
std::vector<LogFunc> find_polynomial_integrals(const VecField& v, int dmax, bool use_logs);

/// Vector Hamiltonian equations for a Hamiltonian one-form eta:
///   x' = -d eta2/dz + d eta3/dy,  y' = -d eta3/dx + d eta1/dz,  z' = -d eta1/dy + d eta2/dx
VecField field_from_one_form(const VecField& eta);

struct BiHamiltonianPair {
    PoissonMatrix first;  // from j1 = (1/m) grad f, acts on grad h
    PoissonMatrix second; // from j2 = -(1/m) grad h, acts on grad f
    VecField field;
};

BiHamiltonianPair bihamiltonian_pair(const LogFunc& f, const LogFunc& h, const Laurent& m);

} // namespace curlflow
