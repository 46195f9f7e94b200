#include "curlflow/catalog.hpp"
#include "curlflow/report.hpp"

#include <doctest.h>

#include <map>

using namespace curlflow;

namespace {

SystemDef entry(const char* name) { return parse_system(find_catalog_entry(name)->source); }

} // namespace

TEST_CASE("catalog classifications")
{
    const std::map<std::string, Classification> expected{
        {"circle-map-3d", Classification::NambuHamiltonian},
        {"euler-top", Classification::NambuHamiltonian},
        {"lagrange", Classification::NambuHamiltonian},
        {"lotka-volterra", Classification::NambuHamiltonian},
        {"paper-3.1", Classification::NambuHamiltonian},
        {"paper-4", Classification::VectorHamiltonianOnly},
        {"paper-4-potential-as-printed", Classification::VectorHamiltonianOnly},
        {"paper-4.2-deformed", Classification::NambuHamiltonian},
        {"paper-4.2-potential-as-printed", Classification::NambuHamiltonian},
        {"sir", Classification::NambuHamiltonian},
    };
    for (const SystemDef& s : catalog()) {
        CAPTURE(s.name);
        const AnalysisReport r = analyze(s);
        REQUIRE(expected.count(s.name) == 1);
        CHECK(r.classification == expected.at(s.name));
        if (r.classification == Classification::NambuHamiltonian)
            CHECK(r.nambu.verified);
        if (r.classification == Classification::VectorHamiltonianOnly) {
            CHECK_FALSE(r.nambu.verified);
            CHECK(r.one_form_verified);
        }
        CHECK(verify(s).passed() == (s.expect == Expectation::Pass));
    }
}

TEST_CASE("paper-3.1 report contents")
{
    const AnalysisReport r = analyze(entry("paper-3.1"));
    CHECK(r.field == std::vector<std::string>{"y", "z", "x*y"});
    CHECK(r.divergence_free);
    CHECK_FALSE(r.curl_vanishes);
    CHECK_FALSE(r.frobenius_zero);
    REQUIRE(r.helicity_zero);
    CHECK_FALSE(*r.helicity_zero);
    REQUIRE(r.potential_verified);
    CHECK(*r.potential_verified);
    REQUIRE(r.integrals.size() == 2);
    CHECK(r.integrals[0].verified);
    CHECK(r.integrals[1].verified);
    CHECK(r.nambu.source == "declared");
    CHECK(r.nambu.multiplier == "1");
    REQUIRE(r.decomposition.size() == 1);
    CHECK(r.decomposition[0].matches);
    CHECK(r.decomposition[0].first_closed);
    CHECK(r.decomposition[0].second_closed);
    CHECK(r.discovered_integrals.size() == 2);
}

TEST_CASE("paper-4 decompositions are not closed")
{
    const AnalysisReport r = analyze(entry("paper-4"));
    REQUIRE(r.decomposition.size() == 3);
    for (const auto& d : r.decomposition) {
        CHECK(d.matches);
        CHECK_FALSE(d.first_closed);
        CHECK_FALSE(d.second_closed);
        CHECK(d.first_invariant);
        CHECK(d.second_invariant);
    }
    REQUIRE(r.helicity_zero);
    CHECK(*r.helicity_zero);
    CHECK(r.discovered_integrals.empty());
    REQUIRE(r.hamiltonian_one_form);
    CHECK((*r.hamiltonian_one_form)[0] == "1/4*x^2*z - 1/4*y^3");
}

TEST_CASE("failed checks carry exact residuals")
{
    const VerifyReport v = verify(entry("paper-4.2-potential-as-printed"));
    CHECK_FALSE(v.passed());
    REQUIRE(v.checks.size() == 1);
    CHECK(v.checks[0].name == "claimed_potential");
    CHECK(v.checks[0].detail == "v - curl(A) = (-y^2 + z^2, x^2 - z^2, -x^2 + y^2)");

    const VerifyReport half = verify(entry("paper-4-potential-as-printed"));
    CHECK_FALSE(half.passed());
    CHECK(half.checks[0].detail == "v - curl(A) = (3*z^2, 3*x^2, 3*y^2)");

    const AnalysisReport r = analyze(entry("paper-4.2-potential-as-printed"));
    REQUIRE(r.potential_verified);
    CHECK_FALSE(*r.potential_verified);
    CHECK(*r.potential_residual == "(-y^2 + z^2, x^2 - z^2, -x^2 + y^2)");
}

TEST_CASE("declared integral failures are reported")
{
    const char* src = R"([system]
name = wrong
variables = x y z
[field]
components = y; z; x*y
[integrals]
x
x^2/2 - z
)";
    const SystemDef s = parse_system(src);
    const VerifyReport v = verify(s);
    CHECK_FALSE(v.passed());
    CHECK_FALSE(v.checks[0].passed);
    CHECK(v.checks[0].detail == "v . grad I = y");
    CHECK(v.checks[1].passed);
    const AnalysisReport r = analyze(s);
    CHECK_FALSE(r.integrals[0].verified);
    CHECK(r.integrals[0].residual == "y");
    // a valid pair is still discovered
    CHECK(r.nambu.verified);
    CHECK(r.nambu.source == "discovered");
}

TEST_CASE("unclassified flow")
{
    const char* src = "[system]\nname = u\nvariables = x y z\n[field]\ncomponents = y + x^2; z; x\n";
    const AnalysisReport r = analyze(parse_system(src));
    CHECK_FALSE(r.divergence_free);
    CHECK(r.classification == Classification::Unclassified);
    CHECK_FALSE(r.hamiltonian_one_form);

    // the radial field is Nambu through log integrals and a degree -3 multiplier
    const char* radial = "[system]\nname = radial\nvariables = x y z\n[field]\ncomponents = x; y; z\n";
    CHECK(analyze(parse_system(radial)).classification == Classification::NambuHamiltonian);
}

TEST_CASE("one integral and a multiplier without a Nambu pair")
{
    // ln(y) - z is found; the second integral x/y - z lies outside the polynomial ansatz
    const char* src = "[system]\nname = b\nvariables = x y z\n[field]\ncomponents = x + y; y; 1\n";
    const AnalysisReport r = analyze(parse_system(src));
    CHECK_FALSE(r.nambu.verified);
    CHECK(r.discovered_integrals == std::vector<std::string>{"-z + ln(y)"});
    CHECK_FALSE(r.multipliers_found.empty());
    CHECK(r.classification == Classification::BiHamiltonianOnly);
}

TEST_CASE("json and text reports share one value")
{
    for (const SystemDef& s : catalog()) {
        const AnalysisReport r = analyze(s);
        const nlohmann::json j = to_json(r);
        for (const char* key : {"system", "divergence_free", "curl_vanishes", "frobenius_zero", "helicity_zero",
                                "potential_verified", "integrals_verified", "nambu_verified", "nambu", "decomposition",
                                "discovered_integrals", "classification"})
            CHECK(j.contains(key));
        CHECK(j["system"] == r.system);
        CHECK(j["classification"] == std::string(to_string(r.classification)));
        CHECK(j["divergence_free"] == r.divergence_free);
        CHECK(j["integrals_verified"].size() == r.integrals.size());
        const std::string text = to_text(r);
        CHECK(text.find("classification: " + std::string(to_string(r.classification))) != std::string::npos);
        CHECK(to_json(r) == j);

        const VerifyReport v = verify(s);
        const nlohmann::json vj = to_json(v);
        CHECK(vj["passed"] == v.passed());
        CHECK(vj["checks"].size() == v.checks.size());
    }
}

TEST_CASE("analysis options are honored")
{
    const SystemDef s = entry("paper-3.1");
    CHECK(analyze(s, {1, 2}).discovered_integrals.empty());
    CHECK(analyze(s, {2, 2}).discovered_integrals.size() == 1);
}

TEST_CASE("bindable parameters keep the declared structure")
{
    const std::string& lv = find_catalog_entry("lotka-volterra")->source;
    for (const auto& [l2, l3] : {std::pair{1, 2}, std::pair{-3, 5}, std::pair{0, 7}})
        CHECK(verify(parse_system(lv, {{"l2", Rational(l2)}, {"l3", Rational(l3)}})).passed());

    const std::string& top = find_catalog_entry("euler-top")->source;
    CHECK(verify(parse_system(top, {{"A", Rational(2)}, {"B", Rational(3)}, {"C", make_rational(-1, 2)}})).passed());

    const std::string& sir = find_catalog_entry("sir")->source;
    CHECK(verify(parse_system(sir, {{"r", make_rational(3, 10)}, {"a", make_rational(1, 7)}})).passed());
}
