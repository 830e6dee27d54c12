#pragma once

#include <string>
#include <vector>

#include "latcount/numeric.hpp"

namespace latcount {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient i belonging to x^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;

    Rational eval(const Rational& x) const;

    /// Substitutes another polynomial for the variable: this(inner(x)).
    Polynomial compose(const Polynomial& inner) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Renders constant term first, e.g. "1 + 14/3 n + 8 n^2".
    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Exact Lagrange interpolation through the given (x, y) points.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

enum class PolyVariable { n, L };

/// Counting function given by one polynomial per residue class of n.
/// With variable L the components are polynomials in L = 2n+1 but
/// component selection still follows the parity of n.
struct QuasiPolynomial {
    int period = 1;  // 1 or 2
    std::vector<Polynomial> components;
    PolyVariable variable = PolyVariable::n;

    Rational eval_at(long n) const;

    /// Collapses to period 1 when both components coincide.
    void normalize();
};

}  // namespace latcount
