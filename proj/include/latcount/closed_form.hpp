#pragma once

#include <vector>

#include "latcount/lattice.hpp"
#include "latcount/polynomial.hpp"

namespace latcount {

/// Bernoulli numbers B_0..B_max, convention B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int max_index);

/// sum_{m=1}^{j} m^k, evaluated through Bernoulli polynomials.
BigInt power_sum(unsigned long j, unsigned long k);

/// Hypercube points with even / odd coordinate sum, closed form.
BigInt v_even(int k, long n);
BigInt v_odd(int k, long n);

/// Same quantities built from the dimension recurrence, for cross-checks.
BigInt v_even_recurrence(int k, long n);
BigInt v_odd_recurrence(int k, long n);

BigInt d_bulk(int k, long n);
BigInt d_surface(int k, long n);
BigInt dstar_bulk(int k, long n);

/// Central coefficient of (1 + x + ... + x^{2n})^k by the alternating
/// binomial sum.
BigInt centered_multinomial(int k, long n);

/// Same value through the factorial (Gamma-quotient) rewriting; used only to
/// cross-check the binomial route.
BigInt centered_multinomial_factorial(int k, long n);

BigInt a_bulk(int k, long n);
BigInt a_surface(int k, long n);

BigInt e_bulk(int k, long n);
BigInt e_surface(int k, long n);

BigInt bulk(const LatticeSpec& spec, long n);
BigInt surface(const LatticeSpec& spec, long n);

enum class CountKind { bulk, surface };

/// Exact quasi-polynomial interpolation of the counting function. Surface
/// polynomials describe n > 0 (surface(0) = 1 is a special case). The result
/// is re-verified against further closed-form values before returning.
QuasiPolynomial fit_quasipolynomial(const LatticeSpec& spec, CountKind kind, PolyVariable var);

}  // namespace latcount
