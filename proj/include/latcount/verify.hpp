#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcount/closed_form.hpp"

namespace latcount {

struct CheckRecord {
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool known_erratum = false;
    bool not_applicable = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool passed() const;
    size_t failures() const;
};

/// Compares closed-form output against the fixture tables (sequence values,
/// eta/gamma coefficients) plus the published parity-count and D-family
/// polynomials typed in code. Errata entries check the corrected value and
/// are flagged.
VerificationReport verify_tables(const std::string& fixtures_path, const std::string& errata_path);

/// Oracle bulk == closed-form bulk for every family with ambient dim <= 8,
/// n = 0..max_n.
VerificationReport verify_oracle_equivalence(long max_n, std::uint64_t budget = 1'000'000'000);

/// Column recurrence of the bulk table at n = column_n (1, 2 or 3); residual
/// must be exactly zero for each k up to k_max.
VerificationReport verify_conjecture_bulk(int column_n, int k_max);

/// Column recurrences of the surface table at n = 1 and n = 2.
VerificationReport verify_conjecture_surface(int k_max);

/// Binomial recurrence for A-family bulk counts over the given ranges.
VerificationReport verify_polynomial_recurrence(int k_max, long n_min, long n_max);

}  // namespace latcount
