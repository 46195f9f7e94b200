#pragma once

#include "curlflow/laurent.hpp"
#include "curlflow/vecfield.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace curlflow {

/// Differential form of degree 0..3 on R^3 with Laurent coefficients.
///
/// Component order per degree:
///   0: (1)   1: (dx, dy, dz)   2: (dy^dz, dz^dx, dx^dy)   3: (dx^dy^dz)
/// so that 1- and 2-forms share the component layout of a vector field.
class DiffForm {
public:
    explicit DiffForm(int degree = 0);
    DiffForm(int degree, std::vector<Laurent> components);

    static DiffForm scalar(const Laurent& f) { return DiffForm(0, {f}); }
    static DiffForm one_form(const VecField& a);
    static DiffForm two_form(const VecField& w);
    static DiffForm volume(const Laurent& f = Laurent(1)) { return DiffForm(3, {f}); }
    /// The coordinate one-form dx_i.
    static DiffForm coordinate(std::size_t i);

    int degree() const { return degree_; }
    const std::vector<Laurent>& components() const { return components_; }
    Laurent& operator[](std::size_t i) { return components_.at(i); }
    const Laurent& operator[](std::size_t i) const { return components_.at(i); }

    /// Components of a degree-1 or degree-2 form as a vector field.
    VecField as_vector() const;

    bool is_zero() const;
    bool is_polynomial() const;

    DiffForm& operator+=(const DiffForm& rhs);
    DiffForm& operator-=(const DiffForm& rhs);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    DiffForm operator-() const;
    friend DiffForm operator*(const Laurent& s, const DiffForm& w);

    friend bool operator==(const DiffForm&, const DiffForm&) = default;

private:
    int degree_;
    std::vector<Laurent> components_;
};

std::size_t component_count(int degree);

/// Coordinate indices of basis element `component` of the given degree.
std::span<const std::size_t> basis_indices(int degree, std::size_t component);

struct BasisSlot {
    std::size_t component;
    int sign;
};

/// Locates dx_{i1}^...^dx_{ik} in the canonical basis; nullopt when an index repeats.
std::optional<BasisSlot> locate_basis(std::span<const std::size_t> indices);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& w);
DiffForm hodge_star(const DiffForm& w);
DiffForm interior_product(const VecField& v, const DiffForm& w);

} // namespace curlflow
