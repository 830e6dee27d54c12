#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace latcount {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k) with n allowed to be any BigInt; k >= 0.
inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Exact division; throws if the quotient is not integral.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    return a / b;
}

/// Rational known to be an integer (e.g. a Bernoulli power sum).
inline BigInt to_integer(const Rational& q) {
    if (q.get_den() != 1)
        throw std::logic_error("to_integer: value " + q.get_str() + " is not integral");
    return q.get_num();
}

}  // namespace latcount
