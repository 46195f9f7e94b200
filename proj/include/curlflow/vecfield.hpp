#pragma once

#include "curlflow/laurent.hpp"

#include <array>

namespace curlflow {

/// Three Laurent components indexed by the system variables.
struct VecField {
    std::array<Laurent, kVariables> components{};

    Laurent& operator[](std::size_t i) { return components.at(i); }
    const Laurent& operator[](std::size_t i) const { return components.at(i); }

    bool is_zero() const;
    bool is_polynomial() const;

    VecField& operator+=(const VecField& rhs);
    VecField& operator-=(const VecField& rhs);
    friend VecField operator+(VecField a, const VecField& b) { return a += b; }
    friend VecField operator-(VecField a, const VecField& b) { return a -= b; }
    VecField operator-() const;
    friend VecField operator*(const Laurent& s, const VecField& v);

    friend bool operator==(const VecField&, const VecField&) = default;
};

Laurent dot(const VecField& a, const VecField& b);
VecField cross(const VecField& a, const VecField& b);

} // namespace curlflow
