#include "curlflow/forms.hpp"

#include "curlflow/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace curlflow {

namespace {

constexpr std::array<std::size_t, 0> kDegree0{};
constexpr std::array<std::array<std::size_t, 1>, 3> kDegree1{{{0}, {1}, {2}}};
constexpr std::array<std::array<std::size_t, 2>, 3> kDegree2{{{1, 2}, {2, 0}, {0, 1}}};
constexpr std::array<std::size_t, 3> kDegree3{0, 1, 2};

void check_degree(int degree)
{
    if (degree < 0)
        throw Error(ErrorKind::DegreeUnderflow, "negative form degree");
    if (degree > 3)
        throw Error(ErrorKind::DegreeOverflow, "form degree exceeds 3");
}

// +1 for an even permutation of distinct indices, -1 for odd.
int permutation_sign(std::span<const std::size_t> indices)
{
    int sign = 1;
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            if (indices[i] > indices[j])
                sign = -sign;
    return sign;
}

} // namespace

std::size_t component_count(int degree)
{
    check_degree(degree);
    return degree == 0 || degree == 3 ? 1 : 3;
}

std::span<const std::size_t> basis_indices(int degree, std::size_t component)
{
    if (component >= component_count(degree))
        throw Error(ErrorKind::InvalidArgument, "basis component out of range");
    switch (degree) {
    case 0: return kDegree0;
    case 1: return kDegree1[component];
    case 2: return kDegree2[component];
    default: return kDegree3;
    }
}

std::optional<BasisSlot> locate_basis(std::span<const std::size_t> indices)
{
    const int degree = static_cast<int>(indices.size());
    check_degree(degree);
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    const int sign = permutation_sign(indices);
    for (std::size_t k = 0; k < component_count(degree); ++k) {
        auto basis = basis_indices(degree, k);
        std::vector<std::size_t> b(basis.begin(), basis.end());
        std::sort(b.begin(), b.end());
        if (b == sorted)
            return BasisSlot{k, sign * permutation_sign(basis)};
    }
    return std::nullopt;
}

DiffForm::DiffForm(int degree) : degree_(degree), components_(component_count(degree)) {}

DiffForm::DiffForm(int degree, std::vector<Laurent> components)
    : degree_(degree), components_(std::move(components))
{
    if (components_.size() != component_count(degree))
        throw Error(ErrorKind::InvalidArgument,
                    "degree-" + std::to_string(degree) + " form needs " +
                        std::to_string(component_count(degree)) + " components");
}

DiffForm DiffForm::one_form(const VecField& a) { return DiffForm(1, {a[0], a[1], a[2]}); }

DiffForm DiffForm::two_form(const VecField& w) { return DiffForm(2, {w[0], w[1], w[2]}); }

DiffForm DiffForm::coordinate(std::size_t i)
{
    DiffForm w(1);
    w[i] = Laurent(1);
    return w;
}

VecField DiffForm::as_vector() const
{
    if (degree_ != 1 && degree_ != 2)
        throw Error(ErrorKind::InvalidArgument, "only 1- and 2-forms map to vector fields");
    return {{components_[0], components_[1], components_[2]}};
}

bool DiffForm::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(),
                       [](const Laurent& c) { return c.is_zero(); });
}

bool DiffForm::is_polynomial() const
{
    return std::all_of(components_.begin(), components_.end(),
                       [](const Laurent& c) { return c.is_polynomial(); });
}

DiffForm& DiffForm::operator+=(const DiffForm& rhs)
{
    if (rhs.degree_ != degree_)
        throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] += rhs.components_[i];
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& rhs)
{
    if (rhs.degree_ != degree_)
        throw Error(ErrorKind::InvalidArgument, "subtracting forms of different degree");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] -= rhs.components_[i];
    return *this;
}

DiffForm DiffForm::operator-() const
{
    DiffForm r(degree_);
    for (std::size_t i = 0; i < components_.size(); ++i)
        r.components_[i] = -components_[i];
    return r;
}

DiffForm operator*(const Laurent& s, const DiffForm& w)
{
    DiffForm r(w.degree_);
    for (std::size_t i = 0; i < w.components_.size(); ++i)
        r.components_[i] = s * w.components_[i];
    return r;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b)
{
    const int degree = a.degree() + b.degree();
    if (degree > 3)
        throw Error(ErrorKind::DegreeOverflow, "wedge product degree exceeds 3");
    DiffForm r(degree);
    std::vector<std::size_t> joined;
    for (std::size_t i = 0; i < a.components().size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.components().size(); ++j) {
            if (b[j].is_zero())
                continue;
            auto ia = basis_indices(a.degree(), i);
            auto ib = basis_indices(b.degree(), j);
            joined.assign(ia.begin(), ia.end());
            joined.insert(joined.end(), ib.begin(), ib.end());
            if (auto slot = locate_basis(joined))
                r[slot->component] += Laurent(slot->sign) * a[i] * b[j];
        }
    }
    return r;
}

DiffForm exterior_derivative(const DiffForm& w)
{
    if (w.degree() >= 3)
        throw Error(ErrorKind::DegreeOverflow, "exterior derivative of a 3-form");
    DiffForm r(w.degree() + 1);
    for (std::size_t c = 0; c < w.components().size(); ++c) {
        if (w[c].is_zero())
            continue;
        DiffForm term(w.degree());
        term[c] = Laurent(1);
        for (std::size_t var = 0; var < kVariables; ++var) {
            Laurent partial = w[c].derivative(var);
            if (partial.is_zero())
                continue;
            r += partial * wedge(DiffForm::coordinate(var), term);
        }
    }
    return r;
}

DiffForm hodge_star(const DiffForm& w)
{
    // Euclidean metric, dx^dy^dz positive; the 1<->2 layouts coincide.
    switch (w.degree()) {
    case 0: return DiffForm(3, {w[0]});
    case 3: return DiffForm(0, {w[0]});
    default: return DiffForm(3 - w.degree(), w.components());
    }
}

DiffForm interior_product(const VecField& v, const DiffForm& w)
{
    if (w.degree() == 0)
        throw Error(ErrorKind::DegreeUnderflow, "interior product of a 0-form");
    DiffForm r(w.degree() - 1);
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < w.components().size(); ++c) {
        if (w[c].is_zero())
            continue;
        auto idx = basis_indices(w.degree(), c);
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            rest.clear();
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != slot)
                    rest.push_back(idx[k]);
            auto where = locate_basis(rest);
            const int sign = (slot % 2 == 0 ? 1 : -1) * where->sign;
            r[where->component] += Laurent(sign) * v[idx[slot]] * w[c];
        }
    }
    return r;
}

} // namespace curlflow
