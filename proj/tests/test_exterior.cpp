#include "support/random.hpp"

#include "curlflow/analysis.hpp"
#include "curlflow/error.hpp"
#include "curlflow/forms.hpp"
#include "curlflow/homotopy.hpp"

#include <doctest.h>

using namespace curlflow;
using curlflow::testing::Gen;

namespace {

const Laurent x = Laurent::variable(0);
const Laurent y = Laurent::variable(1);
const Laurent z = Laurent::variable(2);

Laurent q(long n, long d = 1) { return Laurent(make_rational(n, d)); }

const DiffForm dx = DiffForm::coordinate(0);
const DiffForm dy = DiffForm::coordinate(1);
const DiffForm dz = DiffForm::coordinate(2);

template <class F>
void expect_kind(ErrorKind kind, F&& f)
{
    try {
        f();
        FAIL("expected ", to_string(kind));
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

Rational eval_time(const TimePolynomial& p, const std::array<Rational, 3>& pt, const Rational& t)
{
    Rational sum = 0, tp;
    for (const auto& [power, coeff] : p) {
        mpq_class base = t;
        tp = 1;
        for (int i = 0; i < power; ++i)
            tp *= base;
        sum += tp * coeff.evaluate(pt);
    }
    return sum;
}

Rational det(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// Evaluates the k-form w at point p on the vectors u (alternating multilinear).
Rational apply_form(const DiffForm& w, const std::array<Rational, 3>& p,
                    const std::vector<std::array<Rational, 3>>& u)
{
    const auto k = static_cast<std::size_t>(w.degree());
    Rational sum = 0;
    for (std::size_t comp = 0; comp < component_count(w.degree()); ++comp) {
        const auto idx = basis_indices(w.degree(), comp);
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = u[j][idx[i]];
        sum += w[comp].evaluate(p) * det(m);
    }
    return sum;
}

std::array<Rational, 3> basis_vector(std::size_t i)
{
    std::array<Rational, 3> e{Rational(0), Rational(0), Rational(0)};
    e[i] = 1;
    return e;
}

} // namespace

TEST_CASE("wedge examples")
{
    CHECK((wedge(dx, dx)).is_zero());
    CHECK(wedge(dx, dy) == DiffForm::two_form({{Laurent(), Laurent(), Laurent(1)}}));
    CHECK(wedge(dz, dx) == DiffForm::two_form({{Laurent(), Laurent(1), Laurent()}}));
    CHECK(wedge(wedge(dx, dy), dz) == DiffForm::volume());

    // dI1 ^ dI2 for I1 = xz - y^2/2 - x^3/3, I2 = x^2/2 - z
    const DiffForm di1 = DiffForm::one_form({{z - x * x, -y, x}});
    const DiffForm di2 = DiffForm::one_form({{x, Laurent(), q(-1)}});
    CHECK(wedge(di1, di2).as_vector() == VecField{{y, z, x * y}});

    expect_kind(ErrorKind::DegreeOverflow, [] { (void)wedge(wedge(dx, dy), wedge(dy, dz)); });
}

TEST_CASE("wedge is graded anticommutative")
{
    Gen gen(21);
    for (int i = 0; i < 100; ++i) {
        const int p = gen.integer(0, 3), qd = gen.integer(0, 3 - p);
        const DiffForm a = gen.laurent_form(p), b = gen.laurent_form(qd);
        const DiffForm ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == ((p * qd) % 2 == 0 ? ba : -ba));
    }
}

TEST_CASE("exterior derivative examples")
{
    const DiffForm j1 = DiffForm::one_form({{z - x * x, -y, x}});
    CHECK(exterior_derivative(j1).is_zero());
    const DiffForm f = DiffForm::scalar(x * y + y * z + z * x);
    CHECK(exterior_derivative(f).as_vector() == VecField{{y + z, x + z, x + y}});
    // d(y dx) = dy ^ dx = -dx ^ dy
    const DiffForm ydx = DiffForm::one_form({{y, Laurent(), Laurent()}});
    CHECK(exterior_derivative(ydx).as_vector() == VecField{{Laurent(), Laurent(), q(-1)}});
    expect_kind(ErrorKind::DegreeOverflow, [] { (void)exterior_derivative(DiffForm::volume(x)); });
}

TEST_CASE("d squared vanishes")
{
    Gen gen(22);
    for (int i = 0; i < 100; ++i)
        for (int k = 0; k <= 1; ++k)
            CHECK(exterior_derivative(exterior_derivative(gen.laurent_form(k))).is_zero());
}

TEST_CASE("graded Leibniz rule")
{
    Gen gen(23);
    for (int i = 0; i < 100; ++i) {
        const int p = gen.integer(0, 2), qd = gen.integer(0, 2 - p);
        const DiffForm a = gen.laurent_form(p), b = gen.laurent_form(qd);
        const DiffForm lhs = exterior_derivative(wedge(a, b));
        const DiffForm second = wedge(a, exterior_derivative(b));
        const DiffForm rhs = wedge(exterior_derivative(a), b) + (p % 2 == 0 ? second : -second);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hodge star examples and involution")
{
    CHECK(hodge_star(dx) == wedge(dy, dz));
    CHECK(hodge_star(dy) == wedge(dz, dx));
    CHECK(hodge_star(DiffForm::scalar(x)) == DiffForm::volume(x));
    const VecField a{{q(1, 4) * (z * z - x * y * y), q(1, 4) * (x * x * y - 2 * y * z), q(1, 4) * (y * y - 2 * x * z)}};
    // *d(alpha) = (curl A) as a one-form
    CHECK(hodge_star(exterior_derivative(DiffForm::one_form(a))) == DiffForm::one_form({{y, z, x * y}}));

    Gen gen(24);
    for (int i = 0; i < 100; ++i) {
        const DiffForm w = gen.laurent_form(gen.integer(0, 3));
        CHECK(hodge_star(hodge_star(w)) == w);
    }
}

TEST_CASE("interior product examples")
{
    const VecField v{{y, z, x * y}};
    CHECK(interior_product(v, DiffForm::volume()).as_vector() == v);
    // i_v(dx ^ dy) = v_x dy - v_y dx
    CHECK(interior_product(v, wedge(dx, dy)) == DiffForm::one_form({{-z, y, Laurent()}}));
    CHECK(interior_product(v, dz) == DiffForm::scalar(x * y));
    const DiffForm j1 = DiffForm::one_form({{z - x * x, -y, x}});
    CHECK(interior_product(v, j1).is_zero());
    expect_kind(ErrorKind::DegreeUnderflow, [&] { (void)interior_product(v, DiffForm::scalar(x)); });
}

TEST_CASE("interior product squares to zero")
{
    Gen gen(25);
    for (int i = 0; i < 100; ++i) {
        const VecField v = gen.laurent_vecfield();
        const DiffForm w = gen.laurent_form(gen.integer(2, 3));
        CHECK(interior_product(v, interior_product(v, w)).is_zero());
    }
}

TEST_CASE("d of a one-form matches the curl")
{
    Gen gen(26);
    for (int i = 0; i < 100; ++i) {
        const VecField a = gen.laurent_vecfield();
        CHECK(exterior_derivative(DiffForm::one_form(a)).as_vector() == curl(a));
        CHECK(exterior_derivative(DiffForm::two_form(a)) == DiffForm::volume(divergence(a)));
    }
}

TEST_CASE("field components from d(alpha) ^ dx_i")
{
    Gen gen(27);
    for (int i = 0; i < 50; ++i) {
        const VecField a = gen.laurent_vecfield();
        const DiffForm da = exterior_derivative(DiffForm::one_form(a));
        const VecField v = curl(a);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(hodge_star(wedge(da, DiffForm::coordinate(k))) == DiffForm::scalar(v[k]));
    }
}

TEST_CASE("pullback examples")
{
    const TimeForm f = pullback_scaling(dx);
    REQUIRE(f.spatial.size() == 3);
    CHECK(f.spatial[0] == TimePolynomial{{1, Laurent(1)}});
    CHECK(f.spatial[1].empty());
    REQUIRE(f.dt_part.size() == 1);
    CHECK(f.dt_part[0] == TimePolynomial{{0, x}});

    const TimeForm g = pullback_scaling(y * y * wedge(dx, dy));
    CHECK(g.spatial[2] == TimePolynomial{{4, y * y}});
    REQUIRE(g.dt_part.size() == 3);
    CHECK(g.dt_part[0] == TimePolynomial{{3, y * y * y}});
    CHECK(g.dt_part[1] == TimePolynomial{{3, -(x * y * y)}});
    CHECK(g.dt_part[2].empty());

    expect_kind(ErrorKind::LaurentNotSupported,
                [] { (void)pullback_scaling(Laurent::monomial(Monomial{{-1, 0, 0}}) * dx); });
}

TEST_CASE("pullback matches contraction oracle")
{
    Gen gen(28);
    for (int i = 0; i < 60; ++i) {
        const int k = gen.integer(1, 3);
        const DiffForm w = gen.polynomial_form(k, 3);
        const TimeForm f = pullback_scaling(w);
        const std::array<Rational, 3> p{gen.rational(), gen.rational(), gen.rational()};
        const Rational t = gen.rational(3);
        std::array<Rational, 3> tp{t * p[0], t * p[1], t * p[2]};
        Rational tk1 = 1;
        for (int j = 0; j < k - 1; ++j)
            tk1 *= t;
        for (std::size_t comp = 0; comp < f.dt_part.size(); ++comp) {
            const auto idx = basis_indices(k - 1, comp);
            std::vector<std::array<Rational, 3>> u;
            for (std::size_t b : idx)
                u.push_back(basis_vector(b));
            u.push_back(p);
            CHECK(eval_time(f.dt_part[comp], p, t) == tk1 * apply_form(w, tp, u));
        }
        for (std::size_t comp = 0; comp < f.spatial.size(); ++comp) {
            Rational tk = tk1 * t;
            CHECK(eval_time(f.spatial[comp], p, t) == tk * w[comp].evaluate(tp));
        }
    }
}

TEST_CASE("homotopy potential examples")
{
    const DiffForm w = DiffForm::two_form({{z * z, x * x, y * y}});
    const DiffForm eta = homotopy_potential(w);
    const DiffForm expected = DiffForm::one_form(
        {{q(-1, 4) * (y * y * y - x * x * z), q(-1, 4) * (z * z * z - x * y * y), q(-1, 4) * (x * x * x - y * z * z)}});
    CHECK(eta == expected);
    CHECK(exterior_derivative(eta) == w);

    CHECK(homotopy_potential(2 * x * dx) == DiffForm::scalar(x * x));

    expect_kind(ErrorKind::NotClosed, [] { (void)homotopy_potential(y * dx); });
    expect_kind(ErrorKind::LaurentNotSupported,
                [] { (void)homotopy_potential(Laurent::monomial(Monomial{{0, 0, -1}}) * dx); });
}

TEST_CASE("homotopy potential inverts d on exact forms")
{
    Gen gen(29);
    for (int i = 0; i < 50; ++i) {
        const int k = gen.integer(1, 3);
        const DiffForm beta0 = gen.polynomial_form(k - 1, 4);
        const DiffForm w = exterior_derivative(beta0);
        if (w.is_zero())
            continue;
        CHECK(exterior_derivative(homotopy_potential(w)) == w);
    }
}

TEST_CASE("homotopy identity d D + D d = id")
{
    Gen gen(30);
    for (int i = 0; i < 60; ++i) {
        const int k = gen.integer(1, 3);
        const DiffForm w = gen.polynomial_form(k, 3);
        DiffForm lhs = exterior_derivative(homotopy_operator(w));
        if (k < 3)
            lhs += homotopy_operator(exterior_derivative(w));
        CHECK(lhs == w);
    }
    for (int i = 0; i < 30; ++i) {
        const Laurent f = gen.polynomial(4);
        const DiffForm back = homotopy_operator(exterior_derivative(DiffForm::scalar(f)));
        CHECK(back == DiffForm::scalar(f - Laurent(f.constant_term())));
    }
}
