#pragma once

#include "curlflow/parser.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace curlflow {

enum class Classification {
    NambuHamiltonian,
    BiHamiltonianOnly,
    VectorHamiltonianOnly,
    Unclassified,
};

std::string_view to_string(Classification c);

struct AnalysisOptions {
    int dmax = 3;  // ansatz degree for integral discovery
    int bound = 2; // exponent bound for monomial multipliers
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // rendered exact residual when the check fails
};

struct IntegralStatus {
    std::string expression;
    bool verified = false;
    std::string residual;
};

struct DecompositionStatus {
    std::string label;
    bool matches = false;
    bool first_closed = false;
    bool second_closed = false;
    bool first_invariant = false;
    bool second_invariant = false;
    std::string residual;
};

struct NambuStatus {
    bool verified = false;
    std::string source; // "declared" or "discovered"
    std::string multiplier;
    std::string h1;
    std::string h2;
};

struct AnalysisReport {
    std::string system;
    std::vector<std::string> field;
    bool divergence_free = false;
    std::string divergence;
    bool curl_vanishes = false;
    bool frobenius_zero = false;
    std::string frobenius_obstruction;
    std::optional<bool> helicity_zero;
    std::optional<std::string> helicity;
    std::optional<bool> potential_verified;
    std::optional<std::string> potential_residual;
    std::vector<IntegralStatus> integrals;
    std::optional<CheckResult> multiplier;
    NambuStatus nambu;
    std::vector<DecompositionStatus> decomposition;
    std::vector<std::string> discovered_integrals;
    std::vector<std::string> multipliers_found;
    std::optional<std::vector<std::string>> hamiltonian_one_form;
    bool one_form_verified = false;
    Classification classification = Classification::Unclassified;
};

struct VerifyReport {
    std::string system;
    std::vector<CheckResult> checks;

    bool passed() const;
};

AnalysisReport analyze(const SystemDef& system, const AnalysisOptions& options = {});

/// Checks only what the system declares: integrals, multiplier, potentials,
/// one-form, decompositions, and the Nambu form of the first two integrals.
VerifyReport verify(const SystemDef& system);

nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const AnalysisReport& report);
std::string to_text(const VerifyReport& report);

} // namespace curlflow
