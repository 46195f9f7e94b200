#include "curlflow/report.hpp"

#include "curlflow/analysis.hpp"
#include "curlflow/error.hpp"
#include "curlflow/homotopy.hpp"

#include <algorithm>
#include <sstream>

namespace curlflow {

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::NambuHamiltonian: return "nambu_hamiltonian";
    case Classification::BiHamiltonianOnly: return "bi_hamiltonian_only";
    case Classification::VectorHamiltonianOnly: return "vector_hamiltonian_only";
    case Classification::Unclassified: return "unclassified";
    }
    return "unclassified";
}

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::vector<std::string> render_vector(const VecField& v, const Variables& vars)
{
    return {render(v[0], vars), render(v[1], vars), render(v[2], vars)};
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? ", " : "") + parts[i];
    return out + ")";
}

std::string render_join(const VecField& v, const Variables& vars) { return join(render_vector(v, vars)); }

// k with target == k * v, if any.
std::optional<Rational> proportionality(const VecField& target, const VecField& v)
{
    for (std::size_t i = 0; i < kVariables; ++i) {
        if (v[i].is_zero())
            continue;
        const auto& [m, c] = *v[i].terms().begin();
        const auto it = target[i].terms().find(m);
        if (it == target[i].terms().end())
            return std::nullopt;
        const Rational k = it->second / c;
        if (Laurent(k) * v != target)
            return std::nullopt;
        return k;
    }
    return std::nullopt;
}

struct NambuHit {
    LogFunc h1;
    LogFunc h2;
    Laurent multiplier;
};

// First pair (i < j) and multiplier M with M v = k grad fi x grad fj; fi is rescaled by k.
std::optional<NambuHit> search_pairs(const VecField& v, const std::vector<LogFunc>& fs,
                                     const std::vector<Laurent>& multipliers)
{
    for (const auto& m : multipliers) {
        const VecField target = m * v;
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j)
                if (auto k = proportionality(target, nambu_field(fs[i], fs[j]))) {
                    NambuHit hit{*k * fs[i], fs[j], m};
                    if (verify_nambu_rep(v, hit.h1, hit.h2, m).holds)
                        return hit;
                }
    }
    return std::nullopt;
}

Laurent decomposition_multiplier(const SystemDef& s)
{
    return s.multiplier ? *s.multiplier->inverse() : Laurent(1);
}

} // namespace

AnalysisReport analyze(const SystemDef& s, const AnalysisOptions& options)
{
    const VecField& v = s.field;
    const Variables& vars = s.variables;
    AnalysisReport r;
    r.system = s.name;
    r.field = render_vector(v, vars);

    const Laurent div = divergence(v);
    r.divergence_free = div.is_zero();
    r.divergence = render(div, vars);
    r.curl_vanishes = curl(v).is_zero();
    const Laurent frob = frobenius_obstruction(v);
    r.frobenius_zero = frob.is_zero();
    r.frobenius_obstruction = render(frob, vars);

    if (const auto& a = s.potential ? s.potential : s.claimed_potential) {
        const Laurent h = helicity_density(*a);
        r.helicity_zero = h.is_zero();
        r.helicity = render(h, vars);
        const VectorCheck check = verify_curl_potential(v, *a);
        r.potential_verified = check.holds;
        r.potential_residual = render_join(check.residual, vars);
    }

    bool have_integral = false;
    for (const auto& f : s.integrals) {
        const ScalarCheck c = is_first_integral(v, f);
        r.integrals.push_back({render(f, vars), c.holds, render(c.residual, vars)});
        have_integral = have_integral || c.holds;
    }

    bool have_multiplier = false;
    if (s.multiplier) {
        const MultiplierReport m = check_multiplier(v, *s.multiplier);
        r.multiplier = CheckResult{render(*s.multiplier, vars), m.verdict,
                                   render(m.divergence_residual, vars)};
        have_multiplier = m.verdict;
    }

    const std::vector<Laurent> found = search_monomial_multiplier(v, options.bound);
    for (const auto& m : found)
        r.multipliers_found.push_back(render(m, vars));
    have_multiplier = have_multiplier || !found.empty();

    std::vector<Laurent> candidates;
    if (s.multiplier)
        candidates.push_back(*s.multiplier);
    if (std::find(candidates.begin(), candidates.end(), Laurent(1)) == candidates.end())
        candidates.push_back(Laurent(1));
    for (const auto& m : found)
        if (std::find(candidates.begin(), candidates.end(), m) == candidates.end())
            candidates.push_back(m);

    std::vector<LogFunc> declared;
    for (std::size_t i = 0; i < s.integrals.size(); ++i)
        if (r.integrals[i].verified)
            declared.push_back(s.integrals[i]);

    const std::vector<LogFunc> discovered = find_polynomial_integrals(v, options.dmax, true);
    for (const auto& f : discovered)
        r.discovered_integrals.push_back(render(f, vars));
    have_integral = have_integral || !discovered.empty();

    std::optional<NambuHit> hit = search_pairs(v, declared, candidates);
    r.nambu.source = "declared";
    if (!hit) {
        hit = search_pairs(v, discovered, candidates);
        r.nambu.source = "discovered";
    }
    if (hit) {
        r.nambu.verified = true;
        r.nambu.multiplier = render(hit->multiplier, vars);
        r.nambu.h1 = render(hit->h1, vars);
        r.nambu.h2 = render(hit->h2, vars);
    } else {
        r.nambu.source.clear();
    }

    const Laurent dm = decomposition_multiplier(s);
    for (const auto& d : s.decompositions) {
        const DecompositionReport dr = verify_decomposition(v, d.first, d.second, dm);
        r.decomposition.push_back({d.label, dr.matches, dr.j1_closed, dr.j2_closed, dr.j1_invariant,
                                   dr.j2_invariant, render_join(dr.residual, vars)});
    }

    // i_v(vol) is closed exactly when v is divergence free.
    if (r.divergence_free && v.is_polynomial()) {
        const VecField eta = homotopy_potential(interior_product(v, DiffForm::volume())).as_vector();
        r.hamiltonian_one_form = render_vector(eta, vars);
        r.one_form_verified = field_from_one_form(eta) == v;
    }

    if (r.nambu.verified)
        r.classification = Classification::NambuHamiltonian;
    else if (have_integral && have_multiplier)
        r.classification = Classification::BiHamiltonianOnly;
    else if (r.one_form_verified)
        r.classification = Classification::VectorHamiltonianOnly;
    else
        r.classification = Classification::Unclassified;
    return r;
}

VerifyReport verify(const SystemDef& s)
{
    const VecField& v = s.field;
    const Variables& vars = s.variables;
    VerifyReport r;
    r.system = s.name;
    auto add = [&](std::string name, bool ok, std::string detail) {
        r.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
    };

    if (s.potential) {
        const VectorCheck c = verify_curl_potential(v, *s.potential);
        add("potential", c.holds, render_join(c.residual, vars));
    }
    if (s.claimed_potential) {
        const VectorCheck c = verify_curl_potential(v, *s.claimed_potential);
        add("claimed_potential", c.holds, "v - curl(A) = " + render_join(c.residual, vars));
    }
    for (std::size_t i = 0; i < s.integrals.size(); ++i) {
        const ScalarCheck c = is_first_integral(v, s.integrals[i]);
        add("integral[" + std::to_string(i + 1) + "] " + render(s.integrals[i], vars), c.holds,
            "v . grad I = " + render(c.residual, vars));
    }
    if (s.multiplier) {
        const MultiplierReport m = check_multiplier(v, *s.multiplier);
        add("multiplier " + render(*s.multiplier, vars), m.verdict,
            "div(M v) = " + render(m.divergence_residual, vars));
    }
    if (s.integrals.size() >= 2) {
        const Laurent m = s.multiplier ? *s.multiplier : Laurent(1);
        const VectorCheck c = verify_nambu_rep(v, s.integrals[0], s.integrals[1], m);
        add("nambu", c.holds, "M v - grad H1 x grad H2 = " + render_join(c.residual, vars));
    }
    if (s.one_form) {
        const VecField diff = field_from_one_form(*s.one_form) - v;
        add("one_form", diff.is_zero(), "residual " + render_join(diff, vars));
    }
    const Laurent dm = decomposition_multiplier(s);
    for (const auto& d : s.decompositions) {
        const DecompositionReport dr = verify_decomposition(v, d.first, d.second, dm);
        add("decomposition " + d.label, dr.matches, "residual " + render_join(dr.residual, vars));
    }
    return r;
}

nlohmann::json to_json(const AnalysisReport& r)
{
    using nlohmann::json;
    json j;
    j["system"] = r.system;
    j["field"] = r.field;
    j["divergence_free"] = r.divergence_free;
    j["divergence"] = r.divergence;
    j["curl_vanishes"] = r.curl_vanishes;
    j["frobenius_zero"] = r.frobenius_zero;
    j["frobenius_obstruction"] = r.frobenius_obstruction;
    j["helicity_zero"] = r.helicity_zero ? json(*r.helicity_zero) : json(nullptr);
    j["helicity"] = r.helicity ? json(*r.helicity) : json(nullptr);
    j["potential_verified"] = r.potential_verified ? json(*r.potential_verified) : json(nullptr);
    j["potential_residual"] = r.potential_residual ? json(*r.potential_residual) : json(nullptr);
    json integrals = json::array();
    json verified = json::array();
    for (const auto& i : r.integrals) {
        integrals.push_back({{"expression", i.expression}, {"verified", i.verified}, {"residual", i.residual}});
        verified.push_back(i.verified);
    }
    j["integrals"] = integrals;
    j["integrals_verified"] = verified;
    j["multiplier"] = r.multiplier ? json{{"expression", r.multiplier->name},
                                          {"verified", r.multiplier->passed},
                                          {"divergence_residual", r.multiplier->detail}}
                                   : json(nullptr);
    j["nambu_verified"] = r.nambu.verified;
    j["nambu"] = r.nambu.verified ? json{{"source", r.nambu.source},
                                         {"multiplier", r.nambu.multiplier},
                                         {"h1", r.nambu.h1},
                                         {"h2", r.nambu.h2}}
                                  : json(nullptr);
    json dec = json::array();
    for (const auto& d : r.decomposition)
        dec.push_back({{"label", d.label},
                       {"matches", d.matches},
                       {"first_closed", d.first_closed},
                       {"second_closed", d.second_closed},
                       {"first_invariant", d.first_invariant},
                       {"second_invariant", d.second_invariant},
                       {"residual", d.residual}});
    j["decomposition"] = dec;
    j["discovered_integrals"] = r.discovered_integrals;
    j["multipliers_found"] = r.multipliers_found;
    j["hamiltonian_one_form"] = r.hamiltonian_one_form ? json(*r.hamiltonian_one_form) : json(nullptr);
    j["one_form_verified"] = r.one_form_verified;
    j["classification"] = std::string(to_string(r.classification));
    return j;
}

nlohmann::json to_json(const VerifyReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"system", r.system}, {"passed", r.passed()}, {"checks", checks}};
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string to_text(const AnalysisReport& r)
{
    std::ostringstream out;
    out << "system: " << r.system << "\n";
    out << "  field: " << join(r.field) << "\n";
    out << "  divergence free: " << yes_no(r.divergence_free);
    if (!r.divergence_free)
        out << " (div v = " << r.divergence << ")";
    out << "\n  curl vanishes: " << yes_no(r.curl_vanishes) << "\n";
    out << "  frobenius v.curl v = 0: " << yes_no(r.frobenius_zero);
    if (!r.frobenius_zero)
        out << " (" << r.frobenius_obstruction << ")";
    out << "\n";
    if (r.helicity_zero)
        out << "  helicity A.curl A = 0: " << yes_no(*r.helicity_zero) << " (" << *r.helicity << ")\n";
    if (r.potential_verified) {
        out << "  potential verified: " << yes_no(*r.potential_verified);
        if (!*r.potential_verified)
            out << " (v - curl A = " << *r.potential_residual << ")";
        out << "\n";
    }
    for (const auto& i : r.integrals) {
        out << "  integral " << i.expression << ": " << (i.verified ? "verified" : "FAILED");
        if (!i.verified)
            out << " (v.grad I = " << i.residual << ")";
        out << "\n";
    }
    if (r.multiplier) {
        out << "  multiplier " << r.multiplier->name << ": " << (r.multiplier->passed ? "verified" : "FAILED");
        if (!r.multiplier->passed)
            out << " (div(M v) = " << r.multiplier->detail << ")";
        out << "\n";
    }
    if (r.nambu.verified)
        out << "  nambu (" << r.nambu.source << "): " << r.nambu.multiplier << " * v = grad("
            << r.nambu.h1 << ") x grad(" << r.nambu.h2 << ")\n";
    else
        out << "  nambu: not found\n";
    for (const auto& d : r.decomposition) {
        out << "  decomposition " << d.label << ": " << (d.matches ? "matches" : "MISMATCH")
            << ", closed " << yes_no(d.first_closed) << "/" << yes_no(d.second_closed)
            << ", invariant " << yes_no(d.first_invariant) << "/" << yes_no(d.second_invariant);
        if (!d.matches)
            out << " (residual " << d.residual << ")";
        out << "\n";
    }
    out << "  discovered integrals:";
    if (r.discovered_integrals.empty())
        out << " none";
    for (const auto& f : r.discovered_integrals)
        out << "\n    " << f;
    out << "\n  monomial multipliers:";
    if (r.multipliers_found.empty())
        out << " none";
    for (const auto& m : r.multipliers_found)
        out << " " << m;
    out << "\n";
    if (r.hamiltonian_one_form)
        out << "  hamiltonian one-form: " << join(*r.hamiltonian_one_form)
            << (r.one_form_verified ? "" : " (does not reproduce the field)") << "\n";
    out << "  classification: " << to_string(r.classification) << "\n";
    return out.str();
}

std::string to_text(const VerifyReport& r)
{
    std::ostringstream out;
    out << "system: " << r.system << "\n";
    for (const auto& c : r.checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.passed)
            out << ": " << c.detail;
        out << "\n";
    }
    out << "  result: " << (r.passed() ? "all checks passed" : "verification failed") << "\n";
    return out.str();
}

} // namespace curlflow
