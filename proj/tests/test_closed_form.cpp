#include <doctest.h>

#include "latcount/closed_form.hpp"

using namespace latcount;

TEST_CASE("Bernoulli numbers, B_1 = -1/2 convention") {
    auto b = bernoulli_numbers(12);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[12] == Rational(-691, 2730));
    for (int m = 3; m <= 11; m += 2) CHECK(b[m] == 0);
}

TEST_CASE("power sums match direct summation") {
    CHECK(power_sum(10, 3) == 3025);
    CHECK(power_sum(0, 5) == 0);
    CHECK(power_sum(5, 1) == 15);
    for (unsigned long k = 0; k <= 6; ++k)
        for (unsigned long j = 0; j <= 20; ++j) {
            BigInt direct = 0;
            for (unsigned long m = 1; m <= j; ++m) direct += pow_int(BigInt(m), k);
            CHECK(power_sum(j, k) == direct);
        }
}

TEST_CASE("parity counts: closed form vs recurrence and complement") {
    for (int k = 1; k <= 16; ++k)
        for (long n = 0; n <= 50; n += (n < 8 ? 1 : 7)) {
            CHECK(v_even(k, n) == v_even_recurrence(k, n));
            CHECK(v_odd(k, n) == v_odd_recurrence(k, n));
            CHECK(v_even(k, n) + v_odd(k, n) == pow_int(BigInt(2 * n + 1), k));
        }
    CHECK(v_even(2, 1) == 5);  // 2n^2+2n+1
    CHECK(v_odd(4, 1) == 40);  // 4n(n+1)(2n^2+2n+1)
    for (int k = 1; k <= 8; ++k) CHECK(v_even(k, 0) == 1);
}

TEST_CASE("D-family closed forms") {
    std::vector<long> d3{1, 13, 63, 171, 365, 665};
    for (size_t n = 0; n < d3.size(); ++n) CHECK(d_bulk(3, static_cast<long>(n)) == d3[n]);
    CHECK(d_bulk(4, 2) == 313);
    CHECK(d_surface(3, 2) == 50);
    CHECK(d_surface(5, 0) == 1);
    CHECK(dstar_bulk(3, 1) == 27);
    CHECK(dstar_bulk(1 + 1, 2) == 25);
}

namespace {

// Independent oracle: central coefficient by explicit polynomial powers.
BigInt central_by_multiplication(int k, long n) {
    std::vector<BigInt> poly{1};
    std::vector<BigInt> base(2 * n + 1, BigInt(1));
    for (int rep = 0; rep < k; ++rep) {
        std::vector<BigInt> next(poly.size() + base.size() - 1, BigInt(0));
        for (size_t i = 0; i < poly.size(); ++i)
            for (size_t j = 0; j < base.size(); ++j) next[i + j] += poly[i];
        poly = std::move(next);
    }
    return poly[n * k];
}

}  // namespace

TEST_CASE("centered multinomials") {
    CHECK(centered_multinomial(3, 1) == 7);
    CHECK(centered_multinomial(6, 2) == 1751);
    for (long n = 0; n <= 6; ++n) CHECK(centered_multinomial(1, n) == 1);
    for (int k = 1; k <= 8; ++k)
        for (long n = 0; n <= 4; ++n)
            CHECK(centered_multinomial(k, n) == central_by_multiplication(k, n));
}

TEST_CASE("factorial form equals the binomial form") {
    for (int k = 1; k <= 9; ++k)
        for (long n = 0; n <= 4; ++n)
            CHECK(centered_multinomial_factorial(k, n) == centered_multinomial(k, n));
}

TEST_CASE("A-family counts") {
    CHECK(a_bulk(7, 1) == 1107);
    CHECK(a_surface(5, 3) == 7580);
    for (int k = 1; k <= 8; ++k) CHECK(a_bulk(k, 0) == 1);
    CHECK(a_surface(4, 0) == 1);
}

TEST_CASE("E-family reductions") {
    CHECK(e_bulk(6, 2) == 8755);
    CHECK(e_bulk(8, 2) == 195313);
    CHECK(e_surface(8, 1) == 3280);
    for (long n = 0; n <= 20; ++n) {
        CHECK(e_bulk(6, n) == BigInt(2 * n + 1) * a_bulk(5, n));
        CHECK(e_bulk(7, n) == a_bulk(7, n));
        CHECK(e_bulk(8, n) == v_even(8, n));
    }
    CHECK_THROWS_AS(e_bulk(5, 1), std::invalid_argument);
}

TEST_CASE("family dispatch") {
    CHECK(bulk({Family::D, 5}, 1) == 121);
    CHECK(bulk({Family::A, 4}, 3) == 1451);
    CHECK(bulk({Family::E, 7}, 2) == 38165);
    CHECK(bulk({Family::Z, 4}, 1) == 81);
    CHECK(surface({Family::A, 4}, 0) == 1);
}

TEST_CASE("quasi-polynomial fits") {
    // A_3 bulk: 1 + 14/3 n + 8 n^2 + 16/3 n^3
    QuasiPolynomial a3 = fit_quasipolynomial({Family::A, 3}, CountKind::bulk, PolyVariable::n);
    CHECK(a3.period == 1);
    CHECK(a3.components[0] ==
          Polynomial({1, Rational(14, 3), 8, Rational(16, 3)}));

    // A_4 bulk in L: 9/64 + 25/96 L^2 + 115/192 L^4
    QuasiPolynomial a4l = fit_quasipolynomial({Family::A, 4}, CountKind::bulk, PolyVariable::L);
    CHECK(a4l.period == 1);
    CHECK(a4l.components[0] ==
          Polynomial({Rational(9, 64), 0, Rational(25, 96), 0, Rational(115, 192)}));

    // D_3 bulk: period 2, 4n^3+6n^2+3n+1 (even n) and +0 (odd n)
    QuasiPolynomial d3 = fit_quasipolynomial({Family::D, 3}, CountKind::bulk, PolyVariable::n);
    CHECK(d3.period == 2);
    CHECK(d3.components[0] == Polynomial({1, 3, 6, 4}));
    CHECK(d3.components[1] == Polynomial({0, 3, 6, 4}));

    // D_4 bulk: plain polynomial 1+4n+12n^2+16n^3+8n^4
    QuasiPolynomial d4 = fit_quasipolynomial({Family::D, 4}, CountKind::bulk, PolyVariable::n);
    CHECK(d4.period == 1);
    CHECK(d4.components[0] == Polynomial({1, 4, 12, 16, 8}));

    // Fits evaluate back to the closed form well past the nodes.
    for (auto spec : std::vector<LatticeSpec>{{Family::A, 5}, {Family::D, 6}, {Family::E, 6}}) {
        QuasiPolynomial qp = fit_quasipolynomial(spec, CountKind::bulk, PolyVariable::n);
        for (long n = 0; n <= 3 * spec.rank; ++n)
            CHECK(qp.eval_at(n) == Rational(bulk(spec, n)));
    }

    // Surface fits describe n > 0: A_4 surface is (5/3) n (7 + 23 n^2).
    QuasiPolynomial a4s = fit_quasipolynomial({Family::A, 4}, CountKind::surface, PolyVariable::n);
    CHECK(a4s.period == 1);
    CHECK(a4s.components[0] == Polynomial({0, Rational(35, 3), 0, Rational(115, 3)}));
}

TEST_CASE("polynomial rendering") {
    Polynomial p({1, Rational(14, 3), 8, Rational(16, 3)});
    CHECK(p.to_string("n") == "1 + 14/3 n + 8 n^2 + 16/3 n^3");
    Polynomial q({0, -1, Rational(1, 2)});
    CHECK(q.to_string("x") == "-x + 1/2 x^2");
}
