#include "latcount/polynomial.hpp"

#include <sstream>

namespace latcount {

void Polynomial::trim() {
    // mpq_class(a, b) does not reduce; normalize so equality is structural.
    for (Rational& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs_c == 1 && i > 0;
        if (!unit) os << abs_c.get_str();
        if (i > 0) {
            if (!unit) os << " ";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    Polynomial result;
    for (size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        Rational scale = points[i].second / denom;
        scale.canonicalize();
        result = result + basis * Polynomial::constant(scale);
    }
    return result;
}

Rational QuasiPolynomial::eval_at(long n) const {
    const Polynomial& comp = components[(n % period + period) % period];
    if (variable == PolyVariable::L) return comp.eval(Rational(2 * n + 1));
    return comp.eval(Rational(n));
}

void QuasiPolynomial::normalize() {
    if (period == 2 && components.size() == 2 && components[0] == components[1]) {
        period = 1;
        components.pop_back();
    }
}

}  // namespace latcount
