#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symrep/certificate.hpp"

namespace symrep {

struct Finding {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    bool passed = false;
    std::vector<Finding> findings;
};

struct OracleResult {
    IntPoly f;
    std::optional<int> min_size_found;
    std::optional<SymIntMatrix> witness;
    int max_size = 0;
    int max_entry = 0;
};

/// Characteristic polynomial det(X*I - m) by fraction-free Bareiss
/// elimination over Z[X] — deliberately a different algorithm from
/// charpoly() so the verifier shares no code path with the builder.
IntPoly charpoly_bareiss(const IntMatrix& m);

/// Re-checks every certificate identity and reports one finding per check:
/// symmetric, psatz_identity, intertwine, divides, size_bound. Total
/// function: malformed data yields failing findings, never an exception.
VerificationReport verify_certificate(const EigenCertificate& cert);

inline constexpr unsigned long long kDefaultOracleBudget = 10'000'000ULL;

/// Exhaustive search for the smallest symmetric integer matrix of size
/// <= max_size with entries in [-max_entry, max_entry] whose characteristic
/// polynomial is divisible by f. Enumeration is lexicographic over the
/// row-major upper triangle with entry values ordered 0, 1, -1, 2, -2, ...;
/// the first hit is therefore a canonical least witness. Throws
/// BoundsTooLarge when the estimated candidate count exceeds the budget.
OracleResult brute_force_min_size(const IntPoly& f, int max_size, int max_entry,
                                  unsigned long long budget = kDefaultOracleBudget);

}  // namespace symrep
