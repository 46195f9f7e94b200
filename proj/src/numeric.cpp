#include "curlflow/numeric.hpp"

#include "curlflow/analysis.hpp"
#include "curlflow/error.hpp"

#include <algorithm>
#include <cmath>

namespace curlflow {

CompiledLaurent::CompiledLaurent(const Laurent& f)
{
    terms_.reserve(f.size());
    for (const auto& [m, c] : f.terms())
        terms_.push_back({c.get_d(), m.exponents});
}

namespace {

double int_power(double base, int e)
{
    double r = 1.0;
    for (int k = 0; k < e; ++k)
        r *= base;
    return r;
}

} // namespace

double CompiledLaurent::operator()(const State& x) const
{
    double sum = 0.0;
    for (const auto& t : terms_) {
        double term = t.coeff;
        for (std::size_t i = 0; i < kVariables; ++i) {
            const int e = t.exponents[i];
            if (e > 0) {
                term *= int_power(x[i], e);
            } else if (e < 0) {
                if (x[i] == 0.0)
                    throw Error(ErrorKind::PoleAtPoint, "pole of a Laurent coefficient");
                term /= int_power(x[i], -e);
            }
        }
        sum += term;
    }
    return sum;
}

CompiledField::CompiledField(const VecField& v)
    : components_{CompiledLaurent(v[0]), CompiledLaurent(v[1]), CompiledLaurent(v[2])}
{
}

State CompiledField::operator()(const State& x) const
{
    return {components_[0](x), components_[1](x), components_[2](x)};
}

namespace {

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
Vec<N> axpy(const Vec<N>& x, double a, const Vec<N>& k)
{
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i)
        r[i] = x[i] + a * k[i];
    return r;
}

// Returns the RK4 increment rather than the new state.
template <std::size_t N, class Rhs>
Vec<N> rk4_increment(const Rhs& rhs, const Vec<N>& x, double h)
{
    const Vec<N> k1 = rhs(x);
    const Vec<N> k2 = rhs(axpy(x, h / 2, k1));
    const Vec<N> k3 = rhs(axpy(x, h / 2, k2));
    const Vec<N> k4 = rhs(axpy(x, h, k3));
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i)
        r[i] = h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return r;
}

template <std::size_t N>
bool all_finite(const Vec<N>& x)
{
    return std::all_of(x.begin(), x.end(), [](double d) { return std::isfinite(d); });
}

long step_count(double t_end, double dt)
{
    if (!(dt > 0.0) || !(t_end > 0.0) || !std::isfinite(dt) || !std::isfinite(t_end))
        throw Error(ErrorKind::InvalidArgument, "integration needs t_end > 0 and dt > 0");
    return std::max(1L, std::lround(t_end / dt));
}

// Runs `n` steps, translating evaluation failures into integration errors.
// State updates use Kahan summation so rounding does not swamp the
// truncation error at small steps.
template <std::size_t N, class Rhs, class Observe>
void drive(const Rhs& rhs, Vec<N> x, long n, double dt, Observe observe)
{
    Vec<N> carry{};
    for (long s = 1; s <= n; ++s) {
        try {
            const Vec<N> inc = rk4_increment<N>(rhs, x, dt);
            for (std::size_t i = 0; i < N; ++i) {
                const double yi = inc[i] - carry[i];
                const double ti = x[i] + yi;
                carry[i] = (ti - x[i]) - yi;
                x[i] = ti;
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PoleAtPoint)
                throw Error(ErrorKind::PoleEncountered,
                            "pole encountered at t = " + std::to_string((s - 1) * dt));
            throw;
        }
        if (!all_finite(x))
            throw Error(ErrorKind::NonFiniteState,
                        "non-finite state at t = " + std::to_string(s * dt));
        observe(s, x);
    }
}

} // namespace

Trajectory rk4_integrate(const VecField& v, const State& x0, double t_end, double dt)
{
    const long n = step_count(t_end, dt);
    const CompiledField field(v);
    try {
        (void)field(x0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::PoleAtPoint)
            throw Error(ErrorKind::PoleEncountered, "initial state lies on a pole");
        throw;
    }

    Trajectory traj;
    traj.step = dt;
    traj.times.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(x0);
    drive<3>(field, x0, n, dt, [&](long s, const State& x) {
        traj.times.push_back(static_cast<double>(s) * dt);
        traj.states.push_back(x);
    });
    return traj;
}

DriftReport invariant_drift(const Trajectory& traj, const LogFunc& f, const std::string& name)
{
    if (traj.states.empty())
        throw Error(ErrorKind::InvalidArgument, "empty trajectory");
    DriftReport r;
    r.integral_name = name;
    r.initial_value = f.evaluate(traj.states.front());
    for (const auto& x : traj.states)
        r.max_abs_drift = std::max(r.max_abs_drift, std::abs(f.evaluate(x) - r.initial_value));
    const double scale = std::abs(r.initial_value);
    r.relative_drift = scale > 0.0 ? r.max_abs_drift / scale : r.max_abs_drift;
    return r;
}

VolumeReport variational_volume_check(const VecField& v, const State& x0, double t_end,
                                      double dt)
{
    const long n = step_count(t_end, dt);
    const CompiledField field(v);
    std::array<std::array<CompiledLaurent, 3>, 3> jacobian;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            jacobian[i][j] = CompiledLaurent(v[i].derivative(j));
    const CompiledLaurent div(divergence(v));

    // state: x (3), J row-major (9), integral of div v (1)
    using Aug = Vec<13>;
    auto rhs = [&](const Aug& s) {
        const State x{s[0], s[1], s[2]};
        const State dx = field(x);
        Aug out{};
        out[0] = dx[0];
        out[1] = dx[1];
        out[2] = dx[2];
        double dv[3][3];
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                dv[i][j] = jacobian[i][j](x);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                out[3 + 3 * i + j] = dv[i][0] * s[3 + j] + dv[i][1] * s[6 + j] + dv[i][2] * s[9 + j];
        out[12] = div(x);
        return out;
    };
    auto det = [](const Aug& s) {
        return s[3] * (s[7] * s[11] - s[8] * s[10]) - s[4] * (s[6] * s[11] - s[8] * s[9]) +
               s[5] * (s[6] * s[10] - s[7] * s[9]);
    };

    Aug s0{};
    s0[0] = x0[0];
    s0[1] = x0[1];
    s0[2] = x0[2];
    s0[3] = s0[7] = s0[11] = 1.0;
    try {
        (void)rhs(s0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::PoleAtPoint)
            throw Error(ErrorKind::PoleEncountered, "initial state lies on a pole");
        throw;
    }

    VolumeReport r;
    drive<13>(rhs, s0, n, dt, [&](long s, const Aug& state) {
        const double d = det(state);
        const double expected = std::exp(state[12]);
        r.max_deviation = std::max(r.max_deviation, std::abs(d - expected));
        r.final_determinant = d;
        r.final_expected = expected;
        r.final_time = static_cast<double>(s) * dt;
    });
    return r;
}

double fd_derivative_audit(const LogFunc& f, const State& point, double h)
{
    if (!(h > 0.0))
        throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
    double worst = 0.0;
    for (std::size_t i = 0; i < kVariables; ++i) {
        State plus = point;
        State minus = point;
        plus[i] += h;
        minus[i] -= h;
        const double central = (f.evaluate(plus) - f.evaluate(minus)) / (2 * h);
        const double exact = f.partial(i).evaluate(std::span<const double, 3>(point));
        worst = std::max(worst, std::abs(central - exact));
    }
    return worst;
}

} // namespace curlflow
