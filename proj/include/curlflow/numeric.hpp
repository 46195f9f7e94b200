#pragma once

#include "curlflow/logfunc.hpp"
#include "curlflow/vecfield.hpp"

#include <array>
#include <string>
#include <vector>

namespace curlflow {

using State = std::array<double, kVariables>;

/// Laurent polynomial flattened to double coefficients for fast evaluation.
class CompiledLaurent {
public:
    CompiledLaurent() = default;
    explicit CompiledLaurent(const Laurent& f);

    /// Throws PoleAtPoint on a negative exponent at a zero coordinate.
    double operator()(const State& x) const;

private:
    struct Term {
        double coeff;
        std::array<int, kVariables> exponents;
    };
    std::vector<Term> terms_;
};

class CompiledField {
public:
    explicit CompiledField(const VecField& v);
    State operator()(const State& x) const;

private:
    std::array<CompiledLaurent, kVariables> components_;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    double step = 0.0;
};

/// Classical fixed-step fourth-order Runge-Kutta, round(t_end/dt) steps.
Trajectory rk4_integrate(const VecField& v, const State& x0, double t_end, double dt);

struct DriftReport {
    std::string integral_name;
    double initial_value = 0.0;
    double max_abs_drift = 0.0;
    double relative_drift = 0.0; // max_abs_drift / |initial_value|, or absolute when that is 0
};

DriftReport invariant_drift(const Trajectory& traj, const LogFunc& f,
                            const std::string& name = "f");

struct VolumeReport {
    double max_deviation = 0.0;  // max_t |det J(t) - exp(int_0^t div v)|
    double final_determinant = 1.0;
    double final_expected = 1.0; // exp(int_0^T div v) along the computed trajectory
    double final_time = 0.0;
};

/// Integrates J' = Dv(x) J, J(0) = I, alongside the flow and compares det J
/// with the Liouville prediction.
VolumeReport variational_volume_check(const VecField& v, const State& x0, double t_end,
                                      double dt);

/// max_i |central difference - symbolic partial_i| at `point`.
double fd_derivative_audit(const LogFunc& f, const State& point, double h);

} // namespace curlflow
