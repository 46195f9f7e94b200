#include "curlflow/vecfield.hpp"

#include <algorithm>

namespace curlflow {

bool VecField::is_zero() const
{
    return std::all_of(components.begin(), components.end(),
                       [](const Laurent& c) { return c.is_zero(); });
}

bool VecField::is_polynomial() const
{
    return std::all_of(components.begin(), components.end(),
                       [](const Laurent& c) { return c.is_polynomial(); });
}

VecField& VecField::operator+=(const VecField& rhs)
{
    for (std::size_t i = 0; i < kVariables; ++i)
        components[i] += rhs.components[i];
    return *this;
}

VecField& VecField::operator-=(const VecField& rhs)
{
    for (std::size_t i = 0; i < kVariables; ++i)
        components[i] -= rhs.components[i];
    return *this;
}

VecField VecField::operator-() const
{
    VecField r;
    for (std::size_t i = 0; i < kVariables; ++i)
        r.components[i] = -components[i];
    return r;
}

VecField operator*(const Laurent& s, const VecField& v)
{
    VecField r;
    for (std::size_t i = 0; i < kVariables; ++i)
        r.components[i] = s * v.components[i];
    return r;
}

Laurent dot(const VecField& a, const VecField& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

VecField cross(const VecField& a, const VecField& b)
{
    return {{a[1] * b[2] - a[2] * b[1],
             a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]}};
}

} // namespace curlflow
