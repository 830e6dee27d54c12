#include "latcount/genfunc.hpp"

#include <algorithm>

#include "latcount/closed_form.hpp"

namespace latcount {

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<BigInt> denominator_poly(int pow_minus, int pow_plus) {
    std::vector<BigInt> d{1};
    for (int i = 0; i < pow_minus; ++i) d = poly_mul(d, {BigInt(1), BigInt(-1)});
    for (int i = 0; i < pow_plus; ++i) d = poly_mul(d, {BigInt(1), BigInt(1)});
    return d;
}

BigInt eval_at(const std::vector<BigInt>& poly, long x) {
    BigInt acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (x - root), exact.
std::vector<BigInt> deflate(const std::vector<BigInt>& poly, long root) {
    std::vector<BigInt> out(poly.size() - 1);
    BigInt carry = 0;
    for (size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * root;
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace

void RationalGF::canonicalize() {
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
    while (pow_one_minus_x > 0 && numerator.size() > 0 && eval_at(numerator, 1) == 0) {
        numerator = deflate(numerator, 1);
        for (auto& c : numerator) c = -c;  // (x-1) vs (1-x)
        --pow_one_minus_x;
    }
    while (pow_one_plus_x > 0 && numerator.size() > 0 && eval_at(numerator, -1) == 0) {
        numerator = deflate(numerator, -1);
        --pow_one_plus_x;
    }
}

RationalGF gf_d_bulk(int k) {
    if (k < 2) throw std::invalid_argument("gf_d_bulk: k >= 2 required");
    RationalGF gf;
    gf.pow_one_minus_x = k + 1;
    auto sign = [](long t) { return t % 2 == 0 ? 1 : -1; };
    if (k % 2 == 0) {
        gf.numerator.resize(k + 1);
        for (long i = 0; i <= k; ++i) {
            BigInt twice = 0;
            for (long t = 0; t <= i; ++t)
                twice += (pow_int(BigInt(2 * i - 2 * t + 1), k) + 1) *
                         binomial(static_cast<unsigned long>(k + 1),
                                  static_cast<unsigned long>(t)) *
                         sign(t);
            gf.numerator[i] = exact_div(twice, BigInt(2));
        }
    } else {
        gf.pow_one_plus_x = 1;
        gf.numerator.assign(k + 2, BigInt(0));
        gf.numerator[0] = 1;
        for (long i = 1; i <= k + 1; ++i) {
            BigInt twice = 0;
            for (long t = 0; t <= i; ++t)
                twice += (pow_int(BigInt(2 * i - 2 * t + 1), k) + sign(i - t)) *
                         binomial(static_cast<unsigned long>(k + 1),
                                  static_cast<unsigned long>(t)) *
                         sign(t);
            for (long t = 0; t <= i - 1; ++t)
                twice += (pow_int(BigInt(2 * i - 2 * t - 1), k) - sign(i - t)) *
                         binomial(static_cast<unsigned long>(k + 1),
                                  static_cast<unsigned long>(t)) *
                         sign(t);
            gf.numerator[i] = exact_div(twice, BigInt(2));
        }
    }
    gf.canonicalize();
    return gf;
}

BigInt eta(int k, int j) {
    if (j < 1 || j > k) throw std::invalid_argument("eta: 1 <= j <= k required");
    BigInt twice = 0;
    for (int l = 0; l <= j; ++l) {
        BigInt term = binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(l)) *
                      a_bulk(k, l);
        if ((j + l) % 2 == 0)
            twice += term;
        else
            twice -= term;
    }
    return exact_div(twice, BigInt(2));
}

BigInt gamma_coeff(int k, int l) {
    if (l < 0 || l > k) throw std::invalid_argument("gamma_coeff: 0 <= l <= k required");
    BigInt sum = 0;
    for (int m = 0; m <= l; ++m) {
        BigInt term = binomial(static_cast<unsigned long>(k + 1),
                               static_cast<unsigned long>(l - m)) *
                      a_bulk(k, m);
        if ((l - m) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

RationalGF gf_a_bulk(int k) {
    if (k < 1) throw std::invalid_argument("gf_a_bulk: k >= 1 required");
    RationalGF gf;
    gf.pow_one_minus_x = k + 1;
    gf.numerator.resize(k + 1);
    for (int l = 0; l <= k; ++l) gf.numerator[l] = gamma_coeff(k, l);
    gf.canonicalize();
    return gf;
}

RationalGF gf_e_bulk(int k) {
    if (k == 7) return gf_a_bulk(7);
    if (k == 8) return gf_d_bulk(8);
    if (k != 6) throw std::invalid_argument("gf_e_bulk: rank must be 6, 7 or 8");
    // E_6 bulk is (2n+1) A_5^b(n); numerator = A_5 numerator * (2x d/dx + 1)
    // applied under the (1-x)^7 denominator. Recovered from the sequence.
    RationalGF gf;
    gf.pow_one_minus_x = 7;
    std::vector<BigInt> seq(8);
    for (int n = 0; n < 8; ++n) seq[n] = e_bulk(6, n);
    std::vector<BigInt> den = denominator_poly(7, 0);
    std::vector<BigInt> prod = poly_mul(seq, den);
    prod.resize(7);
    gf.numerator = std::move(prod);
    gf.canonicalize();
    return gf;
}

RationalGF gf_bulk(const LatticeSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::A: return gf_a_bulk(spec.rank);
        case Family::D: return gf_d_bulk(spec.rank);
        case Family::E: return gf_e_bulk(spec.rank);
        case Family::Dstar:
        case Family::Z: {
            // (2n+1)^k sequence; polynomial of degree k, numerator from the
            // first k+1 terms times (1-x)^{k+1}.
            RationalGF gf;
            gf.pow_one_minus_x = spec.rank + 1;
            std::vector<BigInt> seq(spec.rank + 1);
            for (int n = 0; n <= spec.rank; ++n)
                seq[n] = pow_int(BigInt(2 * n + 1), spec.rank);
            std::vector<BigInt> prod = poly_mul(seq, denominator_poly(spec.rank + 1, 0));
            prod.resize(spec.rank + 1);
            gf.numerator = std::move(prod);
            gf.canonicalize();
            return gf;
        }
    }
    throw std::logic_error("unreachable");
}

RationalGF gf_surface(const RationalGF& gf) {
    if (gf.pow_one_minus_x < 1)
        throw std::invalid_argument("gf_surface: no (1-x) factor to decrement");
    RationalGF out = gf;
    --out.pow_one_minus_x;
    return out;
}

std::vector<BigInt> gf_expand(const RationalGF& gf, int count) {
    if (count < 1) throw std::invalid_argument("gf_expand: count >= 1 required");
    const std::vector<BigInt> den = denominator_poly(gf.pow_one_minus_x, gf.pow_one_plus_x);
    std::vector<BigInt> out;
    out.reserve(count);
    for (int n = 0; n < count; ++n) {
        BigInt c = n < static_cast<int>(gf.numerator.size()) ? gf.numerator[n] : BigInt(0);
        const int lim = std::min<int>(n, static_cast<int>(den.size()) - 1);
        for (int i = 1; i <= lim; ++i) c -= den[i] * out[n - i];
        out.push_back(c);
    }
    return out;
}

}  // namespace latcount
