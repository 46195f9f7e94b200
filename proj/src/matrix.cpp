#include "curlflow/matrix.hpp"

#include "curlflow/error.hpp"

#include <stdexcept>
#include <utility>

namespace curlflow {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorKind::InvalidArgument, "ragged matrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const
{
    if (v.size() != cols_)
        throw Error(ErrorKind::InvalidArgument, "matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * v[c];
    return out;
}

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> rows; // first `pivots.size()` rows are the pivot rows
    std::vector<std::size_t> pivots;        // pivot column of each pivot row
};

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m)
{
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
    return rows;
}

Echelon bareiss_echelon(const RationalMatrix& m)
{
    Echelon e{integer_rows(m), {}};
    auto& a = e.rows;
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    Integer previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = r;
        while (pivot < nrows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()))
                    throw std::logic_error("Bareiss step produced an inexact quotient");
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][c] = 0;
        }
        previous = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

std::size_t exact_rank(const RationalMatrix& m) { return bareiss_echelon(m).pivots.size(); }

std::vector<std::vector<Rational>> exact_nullspace(const RationalMatrix& m)
{
    const Echelon e = bareiss_echelon(m);
    const std::size_t ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> x(ncols, Rational(0));
        x[free] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            const std::size_t pc = e.pivots[k];
            Rational sum = 0;
            for (std::size_t j = pc + 1; j < ncols; ++j)
                if (x[j] != 0)
                    sum += Rational(e.rows[k][j]) * x[j];
            x[pc] = -sum / Rational(e.rows[k][pc]);
        }
        // integer entries, content 1
        Integer lcm = 1;
        for (const auto& q : x)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        Integer content = 0;
        for (const auto& q : x) {
            Integer v = q.get_num() * (lcm / q.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
        for (auto& q : x)
            q = Rational(q.get_num() * (lcm / q.get_den()) / content);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace curlflow
