#pragma once

#include "curlflow/rational.hpp"

#include <cstddef>
#include <vector>

namespace curlflow {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Right nullspace basis via fraction-free (Bareiss) elimination.
///
/// One vector per free column, in increasing column order. Each vector has
/// integer entries with content 1 and a positive entry at its free column.
std::vector<std::vector<Rational>> exact_nullspace(const RationalMatrix& m);

/// Rank by the same fraction-free elimination.
std::size_t exact_rank(const RationalMatrix& m);

} // namespace curlflow
