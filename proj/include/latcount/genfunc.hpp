#pragma once

#include <vector>

#include "latcount/lattice.hpp"

namespace latcount {

/// Rational generating function numerator / ((1-x)^a (1+x)^b) with integer
/// numerator coefficients, kept in lowest terms with respect to the two
/// denominator factors.
struct RationalGF {
    std::vector<BigInt> numerator;  // coefficient i belongs to x^i
    int pow_one_minus_x = 0;
    int pow_one_plus_x = 0;

    /// Cancels (1-x) and (1+x) factors shared with the numerator.
    void canonicalize();

    bool operator==(const RationalGF&) const = default;
};

/// Bulk generating function of the D_k sequence from the beta coefficient
/// sums: even k gives sum beta^g_i x^i / (1-x)^{k+1}, odd k gives
/// (1 + sum beta^u_i x^i) / ((1+x)(1-x)^{k+1}) with i running to k+1.
RationalGF gf_d_bulk(int k);

/// Inverse binomial transform coefficients of the A_k bulk counts.
BigInt eta(int k, int j);

/// Numerator coefficients of the A_k bulk generating function.
BigInt gamma_coeff(int k, int l);

RationalGF gf_a_bulk(int k);

RationalGF gf_e_bulk(int k);

/// Bulk GF for any supported spec (Z and Dstar numerators recovered from the
/// closed-form sequence).
RationalGF gf_bulk(const LatticeSpec& spec);

/// First-difference GF: same numerator, one less power of (1-x).
RationalGF gf_surface(const RationalGF& gf);

/// First `count` Taylor coefficients via the denominator's linear recurrence.
std::vector<BigInt> gf_expand(const RationalGF& gf, int count);

}  // namespace latcount
