#pragma once

#include <cstdint>
#include <stdexcept>

#include "latcount/lattice.hpp"

namespace latcount {

enum class OracleMode { integer_points, full_lattice };

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    LatticeSpec spec;
    long n = 0;
    OracleMode mode = OracleMode::integer_points;
    std::uint64_t budget = 1'000'000'000;  // candidate vectors
};

/// Walks every integer vector p in [-n, n]^m and counts those accepted by the
/// membership predicate. Integer-point mode only.
BigInt count_bulk_pspace(const OracleConfig& config);

/// Walks integer coefficient vectors alpha inside the box derived from the
/// inverse generator's row sums and counts those with |G alpha|_inf <= n
/// (and, in integer-point mode, integer G alpha). Coordinates already ruled
/// out by a fully determined row are skipped early; the accepted set is the
/// plain box scan's.
BigInt count_bulk_alphaspace(const OracleConfig& config);

/// bulk(n) - bulk(n-1) with bulk(-1) = 0.
BigInt count_surface(const OracleConfig& config);

}  // namespace latcount
