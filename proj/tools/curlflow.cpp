#include "curlflow/analysis.hpp"
#include "curlflow/catalog.hpp"
#include "curlflow/error.hpp"
#include "curlflow/homotopy.hpp"
#include "curlflow/numeric.hpp"
#include "curlflow/parser.hpp"
#include "curlflow/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

using namespace curlflow;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

struct Options {
    std::string format = "text";
    int dmax = 3;
    int bound = 2;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
};

bool json_output(const Options& o) { return o.format == "json"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string render_vec(const VecField& v, const Variables& vars)
{
    return "(" + render(v[0], vars) + ", " + render(v[1], vars) + ", " + render(v[2], vars) + ")";
}

std::vector<std::string> render_list(const VecField& v, const Variables& vars)
{
    return {render(v[0], vars), render(v[1], vars), render(v[2], vars)};
}

Params parse_overrides(const std::vector<std::string>& items)
{
    Params out;
    const Variables none{"", "", ""};
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::InvalidArgument, "--param expects name=value, got '" + item + "'");
        const LogFunc value = parse_expression(std::string_view(item).substr(eq + 1), none);
        if (!value.is_zero() && (!value.poly().is_constant() || value.has_logs()))
            throw Error(ErrorKind::InvalidArgument, "parameter value must be a rational constant");
        out[item.substr(0, eq)] = value.poly().constant_term();
    }
    return out;
}

std::string read_source(const std::string& target)
{
    if (std::filesystem::is_regular_file(target)) {
        std::ifstream in(target, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    if (const CatalogEntry* e = find_catalog_entry(target))
        return e->source;
    throw Error(ErrorKind::InvalidArgument, "no such file or catalog entry: " + target);
}

SystemDef load(const std::string& target, const Options& o)
{
    return parse_system(read_source(target), parse_overrides(o.params));
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::PoleAtPoint:
    case ErrorKind::PoleEncountered:
    case ErrorKind::NonFiniteState:
    case ErrorKind::LogOfNonPositive:
        return kNumeric;
    case ErrorKind::NotClosed:
        return kVerifyFailed;
    default:
        return kUsage;
    }
}

// Runs `body`, mapping library errors to exit codes and messages on stderr.
int guarded(const std::string& target, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << target << ":" << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

int cmd_analyze(const std::string& file, const Options& o)
{
    const SystemDef s = load(file, o);
    const AnalysisReport r = analyze(s, {o.dmax, o.bound});
    if (json_output(o))
        print_json(to_json(r));
    else
        std::cout << to_text(r);
    return kOk;
}

int cmd_verify(const std::string& file, const Options& o)
{
    const VerifyReport r = verify(load(file, o));
    if (json_output(o))
        print_json(to_json(r));
    else
        std::cout << to_text(r);
    return r.passed() ? kOk : kVerifyFailed;
}

int cmd_potential(const std::string& file, const Options& o)
{
    const SystemDef s = load(file, o);
    const Variables& vars = s.variables;
    const Laurent div = divergence(s.field);
    if (!div.is_zero()) {
        const std::string msg = "i_v(vol) is not closed: div v = " + render(div, vars);
        if (json_output(o))
            print_json({{"system", s.name}, {"closed", false}, {"divergence", render(div, vars)}});
        else
            std::cout << "system: " << s.name << "\n  " << msg << "\n";
        return kVerifyFailed;
    }
    const VecField eta = homotopy_potential(interior_product(s.field, DiffForm::volume())).as_vector();
    const VecField back = field_from_one_form(eta);
    const bool ok = back == s.field;

    std::vector<std::string> equations;
    const auto& n = vars;
    const std::string e[3] = {"eta1", "eta2", "eta3"};
    equations.push_back(n[0] + "' = -d" + e[1] + "/d" + n[2] + " + d" + e[2] + "/d" + n[1] + " = " +
                        render(back[0], vars));
    equations.push_back(n[1] + "' = -d" + e[2] + "/d" + n[0] + " + d" + e[0] + "/d" + n[2] + " = " +
                        render(back[1], vars));
    equations.push_back(n[2] + "' = -d" + e[0] + "/d" + n[1] + " + d" + e[1] + "/d" + n[0] + " = " +
                        render(back[2], vars));

    if (json_output(o)) {
        print_json({{"system", s.name},
                    {"closed", true},
                    {"one_form", render_list(eta, vars)},
                    {"equations", equations},
                    {"reproduces_field", ok}});
    } else {
        std::cout << "system: " << s.name << "\n";
        std::cout << "  hamiltonian one-form eta = " << render_vec(eta, vars) << "\n";
        std::cout << "  vector hamiltonian equations:\n";
        for (const auto& eq : equations)
            std::cout << "    " << eq << "\n";
        std::cout << "  reproduces field: " << (ok ? "yes" : "no") << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_discover(const std::string& file, bool logs, const Options& o)
{
    const SystemDef s = load(file, o);
    const auto integrals = find_polynomial_integrals(s.field, o.dmax, logs);
    const auto multipliers = search_monomial_multiplier(s.field, o.bound);
    std::vector<std::string> ri, rm;
    for (const auto& f : integrals)
        ri.push_back(render(f, s.variables));
    for (const auto& m : multipliers)
        rm.push_back(render(m, s.variables));
    if (json_output(o)) {
        print_json({{"system", s.name},
                    {"dmax", o.dmax},
                    {"logs", logs},
                    {"bound", o.bound},
                    {"integrals", ri},
                    {"multipliers", rm}});
    } else {
        std::cout << "system: " << s.name << "\n";
        std::cout << "  integrals (dmax " << o.dmax << (logs ? ", with logs" : "") << "):"
                  << (ri.empty() ? " none" : "") << "\n";
        for (const auto& f : ri)
            std::cout << "    " << f << "\n";
        std::cout << "  monomial multipliers (bound " << o.bound << "):" << (rm.empty() ? " none" : "") << "\n";
        for (const auto& m : rm)
            std::cout << "    " << m << "\n";
    }
    return kOk;
}

State parse_state(const std::string& text)
{
    State x{};
    std::stringstream in(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i == 3)
            throw Error(ErrorKind::InvalidArgument, "--x0 takes exactly three values");
        try {
            std::size_t used = 0;
            x[i] = std::stod(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "--x0: not a number: '" + item + "'");
        }
        ++i;
    }
    if (i != 3)
        throw Error(ErrorKind::InvalidArgument, "--x0 takes exactly three values");
    return x;
}

int cmd_integrate(const std::string& file, const std::string& x0_text, double t_end, double dt, int every,
                  const Options& o)
{
    if (every < 1)
        throw Error(ErrorKind::InvalidArgument, "--every must be positive");
    const SystemDef s = load(file, o);
    const State x0 = parse_state(x0_text);
    const Trajectory traj = rk4_integrate(s.field, x0, t_end, dt);
    std::vector<DriftReport> drifts;
    for (std::size_t i = 0; i < s.integrals.size(); ++i)
        drifts.push_back(invariant_drift(traj, s.integrals[i], render(s.integrals[i], s.variables)));
    const VolumeReport vol = variational_volume_check(s.field, x0, t_end, dt);

    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < traj.states.size(); i += static_cast<std::size_t>(every))
        rows.push_back(i);
    if (rows.back() != traj.states.size() - 1)
        rows.push_back(traj.states.size() - 1);

    if (json_output(o)) {
        json points = json::array();
        for (std::size_t i : rows)
            points.push_back({{"t", traj.times[i]}, {"x", traj.states[i]}});
        json dj = json::array();
        for (const auto& d : drifts)
            dj.push_back({{"integral", d.integral_name},
                          {"initial_value", d.initial_value},
                          {"max_abs_drift", d.max_abs_drift},
                          {"relative_drift", d.relative_drift}});
        print_json({{"system", s.name},
                    {"variables", s.variables},
                    {"step", traj.step},
                    {"trajectory", points},
                    {"drift", dj},
                    {"volume",
                     {{"max_deviation", vol.max_deviation},
                      {"final_determinant", vol.final_determinant},
                      {"final_expected", vol.final_expected}}}});
        return kOk;
    }
    std::cout.precision(12);
    std::cout << "# system: " << s.name << ", dt = " << traj.step << "\n";
    std::cout << "# t " << s.variables[0] << " " << s.variables[1] << " " << s.variables[2] << "\n";
    for (std::size_t i : rows)
        std::cout << traj.times[i] << " " << traj.states[i][0] << " " << traj.states[i][1] << " "
                  << traj.states[i][2] << "\n";
    std::cout.precision(6);
    for (const auto& d : drifts)
        std::cout << "# drift " << d.integral_name << ": initial " << d.initial_value << ", max |dI| "
                  << d.max_abs_drift << ", relative " << d.relative_drift << "\n";
    std::cout << "# volume: max |det J - exp(int div v)| = " << vol.max_deviation << "\n";
    return kOk;
}

int cmd_examples_list(const Options& o)
{
    if (json_output(o)) {
        json list = json::array();
        for (const auto& e : catalog_entries())
            list.push_back({{"name", e.name}, {"summary", e.summary}});
        print_json(list);
        return kOk;
    }
    std::size_t width = 0;
    for (const auto& e : catalog_entries())
        width = std::max(width, e.name.size());
    for (const auto& e : catalog_entries())
        std::cout << e.name << std::string(width + 2 - e.name.size(), ' ') << e.summary << "\n";
    return kOk;
}

int cmd_examples_show(const std::string& name, const Options& o)
{
    const CatalogEntry* e = find_catalog_entry(name);
    if (!e)
        throw Error(ErrorKind::InvalidArgument, "unknown catalog entry: " + name);
    const SystemDef s = parse_system(e->source, parse_overrides(o.params));
    std::vector<std::string> integrals;
    for (const auto& f : s.integrals)
        integrals.push_back(render(f, s.variables));
    if (json_output(o)) {
        print_json({{"name", e->name},
                    {"summary", e->summary},
                    {"variables", s.variables},
                    {"field", render_list(s.field, s.variables)},
                    {"integrals", integrals},
                    {"source", e->source}});
        return kOk;
    }
    std::cout << e->name << ": " << e->summary << "\n";
    std::cout << "field: " << render_vec(s.field, s.variables) << "\n";
    for (const auto& f : integrals)
        std::cout << "integral: " << f << "\n";
    std::cout << "\n" << e->source;
    return kOk;
}

struct RunAllRow {
    std::string name;
    Classification classification;
    bool verified;
    bool expected;
};

int cmd_examples_run_all(const Options& o)
{
    std::vector<std::future<RunAllRow>> jobs;
    for (const auto& e : catalog_entries()) {
        jobs.push_back(std::async(std::launch::async, [&e, &o] {
            const SystemDef s = parse_system(e.source);
            const AnalysisReport r = analyze(s, {o.dmax, o.bound});
            return RunAllRow{s.name, r.classification, verify(s).passed(), s.expect == Expectation::Pass};
        }));
    }
    std::vector<RunAllRow> rows;
    for (auto& j : jobs)
        rows.push_back(j.get());
    std::sort(rows.begin(), rows.end(), [](const RunAllRow& a, const RunAllRow& b) { return a.name < b.name; });

    bool all = true;
    json out = json::array();
    for (const auto& r : rows) {
        const bool ok = r.verified == r.expected;
        all = all && ok;
        if (json_output(o)) {
            out.push_back({{"system", r.name},
                           {"classification", std::string(to_string(r.classification))},
                           {"verify", r.verified ? "pass" : "fail"},
                           {"expected", r.expected ? "pass" : "fail"},
                           {"ok", ok}});
        } else {
            std::cout << (ok ? "[ok]   " : "[FAIL] ") << r.name << ": " << to_string(r.classification)
                      << ", verify " << (r.verified ? "pass" : "fail") << " (expected "
                      << (r.expected ? "pass" : "fail") << ")\n";
        }
    }
    if (json_output(o))
        print_json({{"systems", out}, {"all_ok", all}});
    else
        std::cout << rows.size() << " systems, " << (all ? "all as expected" : "MISMATCH") << "\n";
    return all ? kOk : kVerifyFailed;
}

// Randomized exact property checks -------------------------------------------

class SelfTestGen {
public:
    explicit SelfTestGen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Laurent polynomial(int degree)
    {
        Laurent f;
        const int n = integer(1, 4);
        for (int i = 0; i < n; ++i) {
            const int a = integer(0, degree);
            const int b = integer(0, degree - a);
            const int c = integer(0, degree - a - b);
            int num = 0;
            while (num == 0)
                num = integer(-5, 5);
            f += Laurent::monomial(Monomial{{a, b, c}}, make_rational(num, integer(1, 4)));
        }
        return f;
    }

    DiffForm form(int degree)
    {
        DiffForm w(degree);
        for (std::size_t i = 0; i < component_count(degree); ++i)
            w[i] = polynomial(3);
        return w;
    }

private:
    std::mt19937_64 rng_;
};

int cmd_selftest(const Options& o)
{
    SelfTestGen gen(o.seed);
    const Variables vars{"x", "y", "z"};
    struct Tally {
        std::string name;
        int passed = 0;
        int total = 0;
    };
    std::vector<Tally> tallies;
    auto run = [&](std::string name, int trials, const std::function<bool()>& check) {
        Tally t{std::move(name)};
        for (int i = 0; i < trials; ++i, ++t.total)
            t.passed += check() ? 1 : 0;
        tallies.push_back(t);
    };

    run("bracket antisymmetry", 100, [&] {
        const LogFunc a(gen.polynomial(2)), b(gen.polynomial(2)), c(gen.polynomial(2));
        return nambu_bracket(b, a, c) == -nambu_bracket(a, b, c) && nambu_bracket(a, c, b) == -nambu_bracket(a, b, c);
    });
    run("generalized Leibniz", 100, [&] {
        const LogFunc a(gen.polynomial(2)), b(gen.polynomial(2));
        const Laurent f = gen.polynomial(2), h = gen.polynomial(2);
        return nambu_bracket(a, b, LogFunc(f * h)) ==
               nambu_bracket(a, b, LogFunc(f)) * h + f * nambu_bracket(a, b, LogFunc(h));
    });
    run("fundamental identity", 100, [&] {
        const LogFunc f1(gen.polynomial(2)), f2(gen.polynomial(2));
        const LogFunc g1(gen.polynomial(2)), g2(gen.polynomial(2)), g3(gen.polynomial(2));
        const Laurent lhs = nambu_bracket(f1, f2, LogFunc(nambu_bracket(g1, g2, g3)));
        const Laurent rhs = nambu_bracket(LogFunc(nambu_bracket(f1, f2, g1)), g2, g3) +
                            nambu_bracket(g1, LogFunc(nambu_bracket(f1, f2, g2)), g3) +
                            nambu_bracket(g1, g2, LogFunc(nambu_bracket(f1, f2, g3)));
        return lhs == rhs;
    });
    run("liouville", 100, [&] {
        return divergence(nambu_field(LogFunc(gen.polynomial(3)), LogFunc(gen.polynomial(3)))).is_zero();
    });
    run("d o d = 0", 100, [&] {
        return exterior_derivative(exterior_derivative(gen.form(gen.integer(0, 1)))).is_zero();
    });
    run("homotopy identity", 100, [&] {
        const int k = gen.integer(1, 3);
        const DiffForm w = gen.form(k);
        DiffForm lhs = exterior_derivative(homotopy_operator(w));
        if (k < 3)
            lhs += homotopy_operator(exterior_derivative(w));
        return lhs == w;
    });
    run("render round trip", 100, [&] {
        LogFunc f(gen.polynomial(4));
        if (gen.integer(0, 1) == 1)
            f += LogFunc::log_of(static_cast<std::size_t>(gen.integer(0, 2)), make_rational(gen.integer(1, 5), 3));
        return parse_expression(render(f, vars), vars) == f;
    });

    bool all = true;
    json out = json::array();
    for (const auto& t : tallies) {
        all = all && t.passed == t.total;
        if (json_output(o))
            out.push_back({{"property", t.name}, {"passed", t.passed}, {"trials", t.total}});
        else
            std::cout << (t.passed == t.total ? "[pass] " : "[FAIL] ") << t.name << ": " << t.passed << "/"
                      << t.total << "\n";
    }
    if (json_output(o))
        print_json({{"seed", o.seed}, {"properties", out}, {"all_passed", all}});
    else
        std::cout << "seed " << o.seed << ": " << (all ? "all properties hold" : "FAILURES") << "\n";
    return all ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"curlflow: exact analysis of 3D flows generated by vector potentials"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--dmax", o.dmax, "Ansatz degree for integral discovery")
        ->check(CLI::Range(1, kMaxAnsatzDegree))
        ->capture_default_str();
    app.add_option("--bound", o.bound, "Exponent bound for monomial multipliers")
        ->check(CLI::Range(0, kMaxMultiplierBound))
        ->capture_default_str();
    app.add_option("--param", o.params, "Parameter override name=value (repeatable)");
    app.add_option("--seed", o.seed, "Seed for selftest sampling")->capture_default_str();

    std::string file;
    int code = kOk;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full structural report");
    analyze_cmd->add_option("file", file, "System file or catalog name")->required();
    analyze_cmd->callback([&] { code = guarded(file, [&] { return cmd_analyze(file, o); }); });

    auto* verify_cmd = app.add_subcommand("verify", "Check declared integrals, multiplier and potentials");
    verify_cmd->add_option("file", file, "System file or catalog name")->required();
    verify_cmd->callback([&] { code = guarded(file, [&] { return cmd_verify(file, o); }); });

    auto* potential_cmd = app.add_subcommand("potential", "Hamiltonian one-form via the homotopy operator");
    potential_cmd->add_option("file", file, "System file or catalog name")->required();
    potential_cmd->callback([&] { code = guarded(file, [&] { return cmd_potential(file, o); }); });

    bool logs = false;
    auto* discover_cmd = app.add_subcommand("discover", "Search first integrals and monomial multipliers");
    discover_cmd->add_option("file", file, "System file or catalog name")->required();
    discover_cmd->add_flag("--logs", logs, "Include ln terms in the ansatz");
    discover_cmd->callback([&] { code = guarded(file, [&] { return cmd_discover(file, logs, o); }); });

    std::string x0;
    double t_end = 0.5;
    double dt = 1e-3;
    int every = 1;
    auto* integrate_cmd = app.add_subcommand("integrate", "RK4 trajectory with invariant drift");
    integrate_cmd->add_option("file", file, "System file or catalog name")->required();
    integrate_cmd->add_option("--x0", x0, "Initial state a,b,c")->required();
    integrate_cmd->add_option("--t", t_end, "End time")->capture_default_str();
    integrate_cmd->add_option("--dt", dt, "Step size")->capture_default_str();
    integrate_cmd->add_option("--every", every, "Print every n-th state")->capture_default_str();
    integrate_cmd->callback(
        [&] { code = guarded(file, [&] { return cmd_integrate(file, x0, t_end, dt, every, o); }); });

    auto* examples_cmd = app.add_subcommand("examples", "Built-in catalog");
    examples_cmd->require_subcommand(1);
    examples_cmd->fallthrough();
    auto* list_cmd = examples_cmd->add_subcommand("list", "List catalog entries");
    list_cmd->callback([&] { code = guarded("list", [&] { return cmd_examples_list(o); }); });
    std::string name;
    auto* show_cmd = examples_cmd->add_subcommand("show", "Print a catalog entry");
    show_cmd->add_option("name", name, "Entry name")->required();
    show_cmd->callback([&] { code = guarded(name, [&] { return cmd_examples_show(name, o); }); });
    auto* run_all_cmd = examples_cmd->add_subcommand("run-all", "Analyze and verify every entry");
    run_all_cmd->callback([&] { code = guarded("run-all", [&] { return cmd_examples_run_all(o); }); });

    auto* selftest_cmd = app.add_subcommand("selftest", "Randomized exact property checks");
    selftest_cmd->callback([&] { code = guarded("selftest", [&] { return cmd_selftest(o); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kOk : kUsage;
    }
    return code;
}
