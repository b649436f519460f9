#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lpcount/counting.hpp"

namespace lpcount {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct OracleRow {
    long long k = 0;
    long long total = 0;
    long long boundary = 0;
    long long interior = 0;
    bool pass = false;
};

/// Full verification record: validation verdicts, the three polynomials,
/// the invariant checklist, and per-k oracle comparisons. Any failing entry
/// makes the report (and the process) fail.
struct VerifyReport {
    std::string digest;
    int dimension = 0;
    int facets = 0;
    int vertices = 0;
    bool integral = false;
    bool simple = false;
    bool delzant = false;
    CountingPolynomials polynomials;
    std::vector<CheckResult> checks;
    std::vector<OracleRow> oracle;
    bool pass = false;
};

/// Runs the checklist (subtraction identity, lacunarity, leading
/// coefficient, reciprocity, derivative identity) and compares the
/// polynomials against brute-force counts for k = 1..kmax. Throws
/// ValidationError subclasses when the input is not Delzant integral.
VerifyReport run_verify(const HRep& h, int kmax);

std::string verify_to_text(const VerifyReport& report);
nlohmann::ordered_json verify_to_json(const VerifyReport& report);

/// {"text": "...", "coefficients": ["a0", "a1", ...]} with ascending exact
/// coefficients.
nlohmann::ordered_json unipoly_to_json(const UniPoly& p);

}  // namespace lpcount
