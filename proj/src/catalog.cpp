#include "curlflow/catalog.hpp"

#include <algorithm>

namespace curlflow {

namespace {

std::vector<CatalogEntry> build_entries()
{
    std::vector<CatalogEntry> entries{
        {"paper-3.1", "superintegrable flow x' = y, y' = z, z' = xy from a vector potential",
         R"(# Superintegrable flow generated by a vector potential with A . curl A != 0.
[system]
name = paper-3.1
variables = x y z

[potential]
components = 1/4*(z^2 - x*y^2); 1/4*(x^2*y - 2*y*z); 1/4*(y^2 - 2*x*z)

[integrals]
x*z - y^2/2 - x^3/3
x^2/2 - z

[decomposition]
J = z - x^2; -y; x | x; 0; -1
)"},
        {"lotka-volterra", "divergence-free Lotka-Volterra system with multiplier 1/(x1 x2 x3)",
         R"(# Reduced Lotka-Volterra system; l1 + l2 + l3 = 0 keeps it divergence free.
[system]
name = lotka-volterra
variables = x1 x2 x3

[params]
l2 = 0
l3 = 0
l1 = -l2 - l3

[field]
x1' = x1*(-x2 + x3 + l1)
x2' = x2*(-x3 + x1 + l2)
x3' = x3*(-x1 + x2 + l3)

[integrals]
ln(x1) + ln(x2) + ln(x3)
x1 + x2 + x3 + l3*ln(x2) - l2*ln(x3)

[multiplier]
1/(x1*x2*x3)

[decomposition]
J = 1/x1; 1/x2; 1/x3 | 1; 1 + l3/x2; 1 - l2/x3
)"},
        {"paper-4", "null-helicity flow x' = z^2, y' = x^2, z' = y^2 (corrected potential)",
         R"(# Null-helicity flow. The potential carries the coefficient -1/4, which
# reproduces the field; the Hamiltonian one-form is the same covector.
[system]
name = paper-4
variables = x y z

[potential]
components = -1/4*(y^3 - x^2*z); -1/4*(z^3 - x*y^2); -1/4*(x^3 - y*z^2)

[one_form]
components = -1/4*(y^3 - x^2*z); -1/4*(z^3 - x*y^2); -1/4*(x^3 - y*z^2)

[decomposition]
J = -x^2; z^2; 0 | -y^2/z^2; 0; 1
K = y^2; 0; -z^2 | -x^2/z^2; 1; 0
L = -x^2; z^2; 0 | 0; -y^2/x^2; 1
)"},
        {"paper-4-potential-as-printed", "null-helicity flow checked against the 1/2-scaled potential",
         R"(# The potential with coefficient 1/2 does not generate the field.
[system]
name = paper-4-potential-as-printed
variables = x y z
expect = fail

[field]
components = z^2; x^2; y^2

[claimed_potential]
components = 1/2*(y^3 - x^2*z); 1/2*(z^3 - x*y^2); 1/2*(x^3 - y*z^2)
)"},
        {"paper-4.2-deformed", "deformed flow grad(xy+yz+zx) x grad((x^2+y^2+z^2)/2)",
         R"(# Deformation of the null-helicity flow that admits a Nambu form.
[system]
name = paper-4.2-deformed
variables = x y z

[field]
x' = z^2 - y^2 + x*z - x*y
y' = x^2 - z^2 + x*y - y*z
z' = y^2 - x^2 + y*z - x*z

[claimed_potential]
components = (x*y + y*z + z*x)*x; (x*y + y*z + z*x)*y; (x*y + y*z + z*x)*z

[integrals]
x*y + y*z + z*x
(x^2 + y^2 + z^2)/2
)"},
        {"paper-4.2-potential-as-printed", "deformed flow checked against its printed vector potential",
         R"(# This candidate potential misses the z^2 - y^2 type terms of the field.
[system]
name = paper-4.2-potential-as-printed
variables = x y z
expect = fail

[field]
x' = z^2 - y^2 + x*z - x*y
y' = x^2 - z^2 + x*y - y*z
z' = y^2 - x^2 + y*z - x*z

[claimed_potential]
components = (y^2 + z^2)*x + x*y*z; (x^2 + z^2)*y + x*y*z; (x^2 + y^2)*z + x*y*z
)"},
        {"euler-top", "Euler top x' = Ayz, y' = Bxz, z' = Cxy",
         R"([system]
name = euler-top
variables = x y z

[params]
A = 1
B = -2
C = 1

[field]
x' = A*y*z
y' = B*x*z
z' = C*x*y

[integrals]
(B*x^2 - A*y^2)/2
(C*x^2 - A*z^2)/(2*A)
)"},
        {"lagrange", "Lagrange system x' = yz, y' = xz, z' = xy",
         R"([system]
name = lagrange
variables = x y z

[field]
components = y*z; x*z; x*y

[integrals]
(x^2 - y^2)/2
(x^2 - z^2)/2
)"},
        {"sir", "SIR epidemic model S' = -rSI, I' = rSI - aI, R' = aI",
         R"(# Neither divergence free nor a curl, yet Nambu with multiplier -1/(r S I).
[system]
name = sir
variables = S I R

[params]
r = 1
a = 1

[field]
S' = -r*S*I
I' = r*S*I - a*I
R' = a*I

[integrals]
S + I + R
R + a/r*ln(S)

[multiplier]
-1/(r*S*I)
)"},
        {"circle-map-3d", "componentwise circle map x' = x^2, y' = y^2, z' = z^2",
         R"([system]
name = circle-map-3d
variables = x y z

[field]
components = x^2; y^2; z^2

[integrals]
x^-1 - y^-1
y^-1 - z^-1

[multiplier]
x^-2*y^-2*z^-2
)"},
    };
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
    return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name)
{
    for (const auto& e : catalog_entries())
        if (e.name == name)
            return &e;
    return nullptr;
}

std::vector<SystemDef> catalog()
{
    std::vector<SystemDef> systems;
    for (const auto& e : catalog_entries())
        systems.push_back(parse_system(e.source));
    return systems;
}

} // namespace curlflow
