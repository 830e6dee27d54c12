#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latcount/numeric.hpp"

namespace latcount {

enum class Family { A, D, Dstar, E, Z };

std::string family_name(Family f);

/// Parses "A", "D", "Dstar", "E" or "Z" (case-insensitive).
Family parse_family(const std::string& s);

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LatticeSpec {
    Family family;
    int rank;

    /// Throws InvalidSpec unless the family/rank combination is supported.
    void validate() const;
    std::string name() const;
};

/// Matrix of exact rationals; every entry in this module has denominator 1 or 2.
using RatMatrix = std::vector<std::vector<Rational>>;

/// Cartesian dimension of the host space the lattice is embedded in.
int ambient_dim(const LatticeSpec& spec);

/// The generator matrix G with ambient_dim rows and `rank` columns; lattice
/// points are G * alpha for integer coefficient vectors alpha.
RatMatrix generator_matrix(const LatticeSpec& spec);

/// Test on integer coordinate vectors p deciding lattice membership,
/// derived from the rows of the inverse generator matrix.
struct MembershipPredicate {
    int ambient_dim = 0;
    bool even_coordinate_sum = false;
    std::vector<std::vector<int>> zero_sum_indices;  // 0-based, pairwise disjoint

    bool accepts(std::span<const long> p) const;
};

MembershipPredicate membership_predicate(const LatticeSpec& spec);

/// Square generator matrix: the generator itself for D/Dstar/Z/E8, the
/// unit-vector extension for A_k (rank k+1) and for E6/E7 (rank 8).
RatMatrix embedded_square_generator(const LatticeSpec& spec);

/// Exact inverse of embedded_square_generator(spec).
RatMatrix invert_generator(const LatticeSpec& spec);

/// Exact inverse of an arbitrary square rational matrix (Gauss-Jordan).
RatMatrix invert_matrix(RatMatrix m);

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

}  // namespace latcount
