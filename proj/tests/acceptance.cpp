// Acceptance suite: one pass/fail line per criterion.

#include "support/oracle.hpp"
#include "support/random.hpp"

#include "curlflow/analysis.hpp"
#include "curlflow/catalog.hpp"
#include "curlflow/homotopy.hpp"
#include "curlflow/numeric.hpp"
#include "curlflow/parser.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace curlflow;
using curlflow::testing::Gen;
using curlflow::testing::in_span;

namespace {

const Laurent x = Laurent::variable(0);
const Laurent y = Laurent::variable(1);
const Laurent z = Laurent::variable(2);

Laurent q(long n, long d = 1) { return Laurent(make_rational(n, d)); }

const VecField v31{{y, z, x * y}};
const LogFunc i1(x * z - q(1, 2) * y * y - q(1, 3) * x * x * x);
const LogFunc i2(q(1, 2) * x * x - z);
const VecField v4{{z * z, x * x, y * y}};
const VecField c41{{y * y * y - x * x * z, z * z * z - x * y * y, x * x * x - y * z * z}};

// Collects failed sub-checks for one criterion.
class Criterion {
public:
    void check(bool ok, const std::string& what)
    {
        if (!ok)
            failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

int failed = 0;

void run(const char* id, const char* title, double limit_seconds, const std::function<void(Criterion&)>& body)
{
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0) {
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << limit_seconds << " s";
        c.check(secs < limit_seconds, os.str());
    }
    const bool ok = c.failures().empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %s %s (%.3f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
    for (const auto& n : c.notes())
        std::printf("       %s\n", n.c_str());
    for (const auto& f : c.failures())
        std::printf("       failed: %s\n", f.c_str());
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string("\"") + CURLFLOW_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main()
{
    run("AC1", "vector potential, helicity, integrals and Nambu field of the superintegrable flow", 1.0,
        [](Criterion& c) {
            const VecField a{{q(1, 4) * (z * z - x * y * y), q(1, 4) * (x * x * y - 2 * y * z),
                              q(1, 4) * (y * y - 2 * x * z)}};
            c.check(curl(a) == v31, "curl(A) == (y, z, xy)");
            c.check(!helicity_density(a).is_zero(), "A . curl A != 0");
            c.check(is_first_integral(v31, i1).holds, "I1 is a first integral");
            c.check(is_first_integral(v31, i2).holds, "I2 is a first integral");
            c.check(nambu_field(i1, i2) == v31, "grad I1 x grad I2 == (y, z, xy)");
        });

    run("AC2", "homotopy operator recovers the Hamiltonian one-form", 0, [](Criterion& c) {
        const DiffForm w = DiffForm::two_form({{z * z, x * x, y * y}});
        const DiffForm eta = homotopy_potential(w);
        const DiffForm expected = q(-1, 4) * DiffForm::one_form(c41);
        c.check(eta == expected, "eta == -1/4((y^3-x^2 z)dx + (z^3-x y^2)dy + (x^3-y z^2)dz)");
        c.check(exterior_derivative(eta) == w, "d eta == w");
    });

    run("AC3", "three decompositions of i_v(vol) for the null-helicity flow, none closed", 0, [](Criterion& c) {
        const Laurent zero;
        const Laurent one(1);
        const auto mono = [](int a, int b, int cc) { return Laurent::monomial(Monomial{{a, b, cc}}, -1); };
        const std::pair<DiffForm, DiffForm> pairs[] = {
            {DiffForm::one_form({{-x * x, z * z, zero}}), DiffForm::one_form({{mono(0, 2, -2), zero, one}})},
            {DiffForm::one_form({{y * y, zero, -z * z}}), DiffForm::one_form({{mono(2, 0, -2), one, zero}})},
            {DiffForm::one_form({{-x * x, z * z, zero}}), DiffForm::one_form({{zero, mono(-2, 2, 0), one}})},
        };
        const char* names[] = {"J", "K", "L"};
        for (std::size_t i = 0; i < 3; ++i) {
            const DecompositionReport r = verify_decomposition(v4, pairs[i].first, pairs[i].second, one);
            const std::string n = names[i];
            c.check(r.matches, n + ": m (j1 ^ j2) == i_v(vol)");
            c.check(!r.j1_closed, n + "1 not closed");
            c.check(!r.j2_closed, n + "2 not closed");
            if (i == 0)
                c.check(r.dj1[0] == -2 * z, "dJ1 has dy^dz component -2z");
        }
    });

    run("AC4", "Lotka-Volterra multiplier, Nambu form and integrals", 0, [](Criterion& c) {
        const SystemDef s = parse_system(find_catalog_entry("lotka-volterra")->source);
        const LogFunc h1 = LogFunc::log_of(0) + LogFunc::log_of(1) + LogFunc::log_of(2);
        const LogFunc h2(x + y + z);
        const Laurent inv = Laurent::monomial(Monomial{{-1, -1, -1}});
        const auto ms = search_monomial_multiplier(s.field, 1);
        c.check(std::find(ms.begin(), ms.end(), inv) != ms.end(), "bound-1 search finds 1/(x1 x2 x3)");
        c.check(verify_nambu_rep(s.field, h1, h2, inv).holds, "(1/(x1 x2 x3)) v == grad H1 x grad H2");
        const auto found = find_polynomial_integrals(s.field, 1, true);
        c.check(in_span(found, h1), "span contains sum ln x_i");
        c.check(in_span(found, h2), "span contains sum x_i");
    });

    run("AC5", "deformed flow: Nambu field, candidate potential fails, I1 grad I2 passes", 0, [](Criterion& c) {
        const VecField field{{z * z - y * y + x * z - x * y, x * x - z * z + x * y - y * z,
                              y * y - x * x + y * z - x * z}};
        const LogFunc s1(x * y + y * z + z * x);
        const LogFunc s2(q(1, 2) * (x * x + y * y + z * z));
        c.check(nambu_field(s1, s2) == field, "grad I1 x grad I2 == deformed field");
        const VecField candidate{{(y * y + z * z) * x + x * y * z, (x * x + z * z) * y + x * y * z,
                                (x * x + y * y) * z + x * y * z}};
        const VectorCheck bad = verify_curl_potential(field, candidate);
        c.check(!bad.holds && !bad.residual.is_zero(), "candidate potential rejected with nonzero residual");
        c.check(verify_curl_potential(field, s1.poly() * gradient(s2)).holds, "I1 grad I2 accepted");
    });

    run("AC6", "wrong coefficient of the null-helicity potential detected", 0, [](Criterion& c) {
        c.check(curl(q(1, 2) * c41) != v4, "curl(1/2 C) != (z^2, x^2, y^2)");
        c.check(curl(q(-1, 4) * c41) == v4, "curl(-1/4 C) == (z^2, x^2, y^2)");
    });

    run("AC7", "bracket identities and Liouville on seeded random inputs", 30.0, [](Criterion& c) {
        Gen gen(20240701);
        const auto p = [&] { return LogFunc(gen.polynomial(2, 4)); };
        int anti = 0, leibniz = 0, fundamental = 0, liouville = 0;
        for (int i = 0; i < 100; ++i) {
            const LogFunc f1 = p(), f2 = p(), f3 = p();
            const Laurent b = nambu_bracket(f1, f2, f3);
            anti += (nambu_bracket(f2, f1, f3) == -b && nambu_bracket(f1, f3, f2) == -b &&
                     nambu_bracket(f3, f2, f1) == -b) ? 1 : 0;
        }
        for (int i = 0; i < 100; ++i) {
            const LogFunc f1 = p(), f2 = p();
            const Laurent f = gen.polynomial(2, 4), h = gen.polynomial(2, 4);
            leibniz += nambu_bracket(f1, f2, LogFunc(f * h)) ==
                               nambu_bracket(f1, f2, LogFunc(f)) * h + f * nambu_bracket(f1, f2, LogFunc(h))
                           ? 1 : 0;
        }
        for (int i = 0; i < 100; ++i) {
            const LogFunc f1 = p(), f2 = p(), g1 = p(), g2 = p(), g3 = p();
            const Laurent lhs = nambu_bracket(f1, f2, LogFunc(nambu_bracket(g1, g2, g3)));
            const Laurent rhs = nambu_bracket(LogFunc(nambu_bracket(f1, f2, g1)), g2, g3) +
                                nambu_bracket(g1, LogFunc(nambu_bracket(f1, f2, g2)), g3) +
                                nambu_bracket(g1, g2, LogFunc(nambu_bracket(f1, f2, g3)));
            fundamental += lhs == rhs ? 1 : 0;
        }
        for (int i = 0; i < 100; ++i)
            liouville += divergence(nambu_field(p(), p())).is_zero() ? 1 : 0;
        c.note("antisymmetry " + std::to_string(anti) + "/100, Leibniz " + std::to_string(leibniz) +
               "/100, fundamental " + std::to_string(fundamental) + "/100, Liouville " +
               std::to_string(liouville) + "/100");
        c.check(anti == 100 && leibniz == 100 && fundamental == 100 && liouville == 100, "all identities exact");
    });

    run("AC8", "RK4 drift, step-halving order, volume preservation and control flow", 0, [](Criterion& c) {
        const Trajectory t1 = rk4_integrate(v31, {1, 1, 1}, 0.5, 1e-3);
        const Trajectory t2 = rk4_integrate(v31, {1, 1, 1}, 0.5, 5e-4);
        for (const auto& [f, name] : {std::pair{&i1, "I1"}, std::pair{&i2, "I2"}}) {
            const DriftReport a = invariant_drift(t1, *f, name);
            const DriftReport b = invariant_drift(t2, *f, name);
            const double ratio = a.max_abs_drift / b.max_abs_drift;
            c.note(std::string(name) + ": relative drift " + sci(a.relative_drift) + " (< 1e-8), halving ratio " +
                   std::to_string(ratio) + " (>= 12)");
            c.check(a.relative_drift < 1e-8, std::string(name) + " relative drift < 1e-8");
            c.check(ratio >= 12.0, std::string(name) + " drift shrinks >= 12x when dt halves");
        }
        const VolumeReport lag = variational_volume_check({{y * z, x * z, x * y}}, {0.3, 0.2, 0.1}, 1.0, 1e-3);
        c.note("Lagrange max |det J - 1| = " + sci(lag.max_deviation) + " (< 1e-7)");
        c.check(lag.max_deviation < 1e-7, "Lagrange volume preserved to 1e-7");
        const VolumeReport lin = variational_volume_check({{x, y, z}}, {1, 1, 1}, 1.0, 1e-3);
        const double err = std::abs(lin.final_determinant - std::exp(3.0));
        c.note("control det J(1) - e^3 = " + sci(err) + " (< 1e-6)");
        c.check(err < 1e-6, "control flow matches e^{3t}");
    });

    run("AC9", "integral discovery: none for the null-helicity flow, two for the superintegrable flow", 0,
        [](Criterion& c) {
            c.check(find_polynomial_integrals(v4, 4, false).empty(), "(z^2, x^2, y^2), dmax 4 -> empty");
            const auto found = find_polynomial_integrals(v31, 3, false);
            c.check(found.size() == 2, "(y, z, xy), dmax 3 -> 2-dimensional");
            c.check(in_span(found, i1) && in_span(found, i2), "I1 and I2 reduce to zero against the basis");
        });

    run("AC10", "parser round trip, catalog, grammar errors, examples run-all", 60.0, [](Criterion& c) {
        Gen gen(777);
        const Variables vars{"x", "y", "z"};
        int round_trips = 0;
        for (int i = 0; i < 100; ++i) {
            const LogFunc f = gen.logfunc();
            round_trips += parse_expression(render(f, vars), vars) == f ? 1 : 0;
        }
        c.check(round_trips == 100, "round trip " + std::to_string(round_trips) + "/100");
        for (const auto& e : catalog_entries()) {
            try {
                (void)parse_system(e.source);
            } catch (const std::exception& ex) {
                c.check(false, "catalog entry " + e.name + ": " + ex.what());
            }
        }
        const std::pair<const char*, ParseErrorKind> errors[] = {
            {"1/(x+y)", ParseErrorKind::NonMonomialDenominator},
            {"2x", ParseErrorKind::Syntax},
            {"x^y", ParseErrorKind::NonIntegerExponent},
        };
        for (const auto& [src, kind] : errors) {
            bool ok = false;
            try {
                (void)parse_expression(src, vars);
            } catch (const ParseError& e) {
                ok = e.kind() == kind;
            }
            c.check(ok, std::string("'") + src + "' -> " + std::string(to_string(kind)));
        }
        const int status = run_cli("examples run-all");
        c.check(status == 0, "examples run-all exit status " + std::to_string(status));
    });

    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
