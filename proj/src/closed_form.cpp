#include "latcount/closed_form.hpp"

#include <mutex>

namespace latcount {

std::vector<Rational> bernoulli_numbers(int max_index) {
    // B_m = -1/(m+1) * sum_{i<m} C(m+1, i) B_i, seeded with B_0 = 1.
    std::vector<Rational> b;
    b.reserve(max_index + 1);
    b.emplace_back(1);
    for (int m = 1; m <= max_index; ++m) {
        Rational acc(0);
        for (int i = 0; i < m; ++i) acc += Rational(binomial(m + 1ul, i)) * b[i];
        Rational val = -acc / Rational(m + 1);
        val.canonicalize();
        b.push_back(val);
    }
    return b;
}

BigInt power_sum(unsigned long j, unsigned long k) {
    if (j == 0) return 0;
    if (k == 0) return BigInt(j);  // the Bernoulli form below would count the m=0 term as 0^0 = 1
    // (B_{k+1}(j+1) - B_{k+1}(0)) / (k+1) with B_m(x) = sum C(m,i) B_i x^{m-i}.
    static std::vector<Rational> bern;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (bern.size() < k + 2) bern = bernoulli_numbers(static_cast<int>(k) + 1);
    const unsigned long m = k + 1;
    Rational x(BigInt(j) + 1);
    Rational at_x(0);
    Rational xpow(1);
    for (unsigned long i = 0; i <= m; ++i) {
        // term for B_{m-i} x^i
        at_x += Rational(binomial(m, m - i)) * bern[m - i] * xpow;
        xpow *= x;
    }
    Rational diff = (at_x - bern[m]) / Rational(m);
    diff.canonicalize();
    return to_integer(diff);
}

BigInt v_even(int k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("v_even: k >= 1, n >= 0 required");
    BigInt edge = pow_int(BigInt(2 * n + 1), k);
    if (k % 2 == 0) return (edge + 1) / 2;
    return (edge + (n % 2 == 0 ? 1 : -1)) / 2;
}

BigInt v_odd(int k, long n) {
    return pow_int(BigInt(2 * n + 1), k) - v_even(k, n);
}

BigInt v_even_recurrence(int k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("v_even_recurrence: bad arguments");
    BigInt g = n + (n % 2 == 0 ? 1 : 0);
    BigInt u = n + (n % 2 == 0 ? 0 : 1);
    const BigInt g1 = g, u1 = u;
    for (int dim = 2; dim <= k; ++dim) {
        BigInt g_next = u * u1 + g * g1;
        BigInt u_next = u * g1 + g * u1;
        g = g_next;
        u = u_next;
    }
    return g;
}

BigInt v_odd_recurrence(int k, long n) {
    return pow_int(BigInt(2 * n + 1), k) - v_even_recurrence(k, n);
}

BigInt d_bulk(int k, long n) {
    if (k < 2) throw std::invalid_argument("d_bulk: k >= 2 required");
    return v_even(k, n);
}

BigInt d_surface(int k, long n) {
    if (n == 0) return 1;
    return d_bulk(k, n) - d_bulk(k, n - 1);
}

BigInt dstar_bulk(int k, long n) {
    if (k < 2 || n < 0) throw std::invalid_argument("dstar_bulk: bad arguments");
    return pow_int(BigInt(2 * n + 1), k);
}

BigInt centered_multinomial(int k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("centered_multinomial: bad arguments");
    const BigInt top = BigInt(n) * k;
    const long period = 2 * n + 1;
    BigInt sum = 0;
    for (BigInt j = 0; j * period <= top; ++j) {
        BigInt term = binomial(BigInt(k), j.get_ui()) *
                      binomial(top - j * period + k - 1, static_cast<unsigned long>(k - 1));
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigInt centered_multinomial_factorial(int k, long n) {
    if (k < 1 || n < 0) throw std::invalid_argument("centered_multinomial_factorial: bad arguments");
    const BigInt top = BigInt(n) * k;
    const long period = 2 * n + 1;
    BigInt sum = 0;
    for (BigInt j = 0; j * period <= top; ++j) {
        unsigned long ju = j.get_ui();
        // k/j! * (k(n+1) - j(2n+1) - 1)! / ((k-j)! (kn - j(2n+1))!)
        BigInt num = k * factorial(BigInt((BigInt(n) + 1) * k - j * period - 1).get_ui());
        BigInt den = factorial(ju) * factorial(k - ju) *
                     factorial(BigInt(top - j * period).get_ui());
        BigInt term = exact_div(num, den);
        if (ju % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigInt a_bulk(int k, long n) {
    if (k < 0) throw std::invalid_argument("a_bulk: k >= 0 required");
    if (k == 0) return 1;
    return centered_multinomial(k + 1, n);
}

BigInt a_surface(int k, long n) {
    if (n == 0) return 1;
    return a_bulk(k, n) - a_bulk(k, n - 1);
}

BigInt e_bulk(int k, long n) {
    if (k == 6) return BigInt(2 * n + 1) * a_bulk(5, n);
    if (k == 7) return a_bulk(7, n);
    if (k == 8) return v_even(8, n);
    throw std::invalid_argument("e_bulk: rank must be 6, 7 or 8");
}

BigInt e_surface(int k, long n) {
    if (n == 0) return 1;
    return e_bulk(k, n) - e_bulk(k, n - 1);
}

BigInt bulk(const LatticeSpec& spec, long n) {
    spec.validate();
    if (n < 0) return 0;
    switch (spec.family) {
        case Family::A: return a_bulk(spec.rank, n);
        case Family::D: return d_bulk(spec.rank, n);
        case Family::Dstar: return dstar_bulk(spec.rank, n);
        case Family::E: return e_bulk(spec.rank, n);
        case Family::Z: return pow_int(BigInt(2 * n + 1), spec.rank);
    }
    throw std::logic_error("unreachable");
}

BigInt surface(const LatticeSpec& spec, long n) {
    if (n == 0) return 1;
    return bulk(spec, n) - bulk(spec, n - 1);
}

QuasiPolynomial fit_quasipolynomial(const LatticeSpec& spec, CountKind kind, PolyVariable var) {
    spec.validate();
    const int degree = kind == CountKind::bulk ? spec.rank : spec.rank - 1;
    const long start = kind == CountKind::bulk ? 0 : 1;  // surface(0) is special-cased
    auto value = [&](long n) {
        return kind == CountKind::bulk ? bulk(spec, n) : surface(spec, n);
    };

    QuasiPolynomial qp;
    qp.period = 2;
    qp.variable = PolyVariable::n;
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<std::pair<Rational, Rational>> pts;
        long n = start;
        while (n % 2 != parity) ++n;
        for (int i = 0; i <= degree; ++i, n += 2)
            pts.emplace_back(Rational(n), Rational(value(n)));
        qp.components.push_back(interpolate(pts));
    }
    qp.normalize();

    // Verify on a window beyond the interpolation nodes; a mismatch means a
    // formula bug, not bad input.
    for (long n = start; n <= start + 3 * degree + 4; ++n) {
        if (qp.eval_at(n) != Rational(value(n)))
            throw std::logic_error("fit_quasipolynomial: verification failed for " + spec.name() +
                                   " at n=" + std::to_string(n));
    }

    if (var == PolyVariable::L) {
        // n = (L-1)/2, exact rational substitution.
        Polynomial half_l(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
        for (auto& comp : qp.components) comp = comp.compose(half_l);
        qp.variable = PolyVariable::L;
    }
    return qp;
}

}  // namespace latcount
