#include "curlflow/logfunc.hpp"

#include "curlflow/error.hpp"

#include <cmath>
#include <string>

namespace curlflow {

LogFunc::LogFunc(Laurent poly, const LogTerms& logs) : poly_(std::move(poly))
{
    for (const auto& [var, c] : logs)
        add_log(var, c);
}

LogFunc LogFunc::log_of(std::size_t var, const Rational& coeff)
{
    LogFunc f;
    f.add_log(var, coeff);
    return f;
}

void LogFunc::add_log(std::size_t var, const Rational& c)
{
    if (var >= kVariables)
        throw Error(ErrorKind::InvalidArgument, "log of variable index out of range");
    if (c == 0)
        return;
    auto [it, inserted] = logs_.try_emplace(var, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            logs_.erase(it);
    }
}

Laurent LogFunc::partial(std::size_t var) const
{
    Laurent d = poly_.derivative(var);
    if (auto it = logs_.find(var); it != logs_.end())
        d += Laurent::monomial(Monomial::unit(var, -1), it->second);
    return d;
}

VecField LogFunc::gradient() const
{
    return {{partial(0), partial(1), partial(2)}};
}

double LogFunc::evaluate(std::span<const double, kVariables> point) const
{
    double value = poly_.evaluate(point);
    for (const auto& [var, c] : logs_) {
        if (!(point[var] > 0.0))
            throw Error(ErrorKind::LogOfNonPositive,
                        "logarithm of non-positive coordinate " + std::to_string(var));
        value += c.get_d() * std::log(point[var]);
    }
    return value;
}

LogFunc LogFunc::operator-() const
{
    LogFunc r;
    r.poly_ = -poly_;
    for (const auto& [var, c] : logs_)
        r.logs_.emplace(var, -c);
    return r;
}

LogFunc& LogFunc::operator+=(const LogFunc& rhs)
{
    poly_ += rhs.poly_;
    for (const auto& [var, c] : rhs.logs_)
        add_log(var, c);
    return *this;
}

LogFunc& LogFunc::operator-=(const LogFunc& rhs)
{
    poly_ -= rhs.poly_;
    for (const auto& [var, c] : rhs.logs_)
        add_log(var, -c);
    return *this;
}

LogFunc operator*(const Rational& s, const LogFunc& f)
{
    LogFunc r;
    r.poly_ = Laurent(s) * f.poly_;
    for (const auto& [var, c] : f.logs_)
        r.add_log(var, s * c);
    return r;
}

} // namespace curlflow
