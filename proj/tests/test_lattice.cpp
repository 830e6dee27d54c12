#include <doctest.h>

#include <random>

#include "latcount/lattice.hpp"

using namespace latcount;

namespace {

RatMatrix identity(int n) {
    RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW((LatticeSpec{Family::E, 6}).validate());
    CHECK_THROWS_AS((LatticeSpec{Family::E, 5}).validate(), InvalidSpec);
    CHECK_THROWS_AS((LatticeSpec{Family::D, 1}).validate(), InvalidSpec);
    CHECK_THROWS_AS((LatticeSpec{Family::A, 0}).validate(), InvalidSpec);
    CHECK_THROWS_AS(parse_family("Q"), InvalidSpec);
    CHECK(parse_family("dstar") == Family::Dstar);
}

TEST_CASE("ambient dimensions") {
    CHECK(ambient_dim({Family::A, 5}) == 6);
    CHECK(ambient_dim({Family::D, 4}) == 4);
    CHECK(ambient_dim({Family::E, 6}) == 8);
    CHECK(ambient_dim({Family::Z, 3}) == 3);
    CHECK(ambient_dim({Family::Dstar, 7}) == 7);
}

TEST_CASE("generator matrices match the published ones") {
    RatMatrix d2 = generator_matrix({Family::D, 2});
    CHECK(d2 == RatMatrix{{1, 1}, {1, -1}});

    RatMatrix a2 = generator_matrix({Family::A, 2});
    CHECK(a2 == RatMatrix{{1, 0}, {-1, 1}, {0, -1}});

    RatMatrix d3 = generator_matrix({Family::D, 3});
    CHECK(d3 == RatMatrix{{1, 1, 0}, {1, -1, 1}, {0, 0, -1}});

    RatMatrix e8 = generator_matrix({Family::E, 8});
    REQUIRE(e8.size() == 8);
    REQUIRE(e8[0].size() == 8);
    CHECK(e8[0][0] == 2);
    for (int i = 1; i < 8; ++i) CHECK(e8[i][0] == 0);
    for (int i = 0; i < 8; ++i) CHECK(abs(e8[i][7]) == Rational(1, 2));
}

TEST_CASE("generator column sums: A columns vanish, D columns even") {
    for (int k : {1, 2, 3, 5, 8}) {
        RatMatrix g = generator_matrix({Family::A, k});
        for (int j = 0; j < k; ++j) {
            Rational s(0);
            for (const auto& row : g) s += row[j];
            CHECK(s == 0);
        }
    }
    for (int k : {2, 3, 4, 5, 8}) {
        RatMatrix g = generator_matrix({Family::D, k});
        for (int j = 0; j < k; ++j) {
            Rational s(0);
            for (const auto& row : g) s += row[j];
            CHECK(s.get_den() == 1);
            CHECK(s.get_num() % 2 == 0);
        }
    }
}

TEST_CASE("D_5 generator follows the band pattern") {
    RatMatrix g = generator_matrix({Family::D, 5});
    RatMatrix want{{1, 1, 0, 0, 0},
                   {1, -1, 1, 0, 0},
                   {0, 0, -1, 1, 0},
                   {0, 0, 0, -1, 1},
                   {0, 0, 0, 0, -1}};
    CHECK(g == want);
}

TEST_CASE("inverse generators") {
    RatMatrix d3inv = invert_generator({Family::D, 3});
    RatMatrix want{{Rational(1, 2), Rational(1, 2), Rational(1, 2)},
                   {Rational(1, 2), Rational(-1, 2), Rational(-1, 2)},
                   {0, 0, -1}};
    CHECK(d3inv == want);

    for (auto spec : std::vector<LatticeSpec>{{Family::D, 4},
                                              {Family::Dstar, 5},
                                              {Family::A, 3},
                                              {Family::E, 6},
                                              {Family::E, 7},
                                              {Family::E, 8},
                                              {Family::Z, 4}}) {
        RatMatrix g = embedded_square_generator(spec);
        RatMatrix prod = matmul(invert_generator(spec), g);
        CHECK(prod == identity(static_cast<int>(g.size())));
    }

    // Embedded E_7 inverse: last row all ones.
    RatMatrix e7inv = invert_generator({Family::E, 7});
    for (int j = 0; j < 8; ++j) CHECK(e7inv[7][j] == 1);
}

TEST_CASE("membership predicates") {
    MembershipPredicate d3 = membership_predicate({Family::D, 3});
    CHECK(d3.even_coordinate_sum);
    long p1[] = {1, 1, 0};
    CHECK(d3.accepts(p1));
    long p2[] = {1, 0, 0};
    CHECK_FALSE(d3.accepts(p2));

    MembershipPredicate a2 = membership_predicate({Family::A, 2});
    long q1[] = {1, 0, -1};
    long q2[] = {1, 1, -1};
    CHECK(a2.accepts(q1));
    CHECK_FALSE(a2.accepts(q2));

    MembershipPredicate e6 = membership_predicate({Family::E, 6});
    long r1[] = {2, 1, -1, 0, 0, 0, 0, -2};
    CHECK(e6.accepts(r1));
    long r2[] = {2, 1, -1, 0, 0, 0, 0, -1};
    CHECK_FALSE(e6.accepts(r2));

    MembershipPredicate dstar = membership_predicate({Family::Dstar, 4});
    long s1[] = {1, 1, 1, 0};
    CHECK(dstar.accepts(s1));
}

TEST_CASE("E_6 example point recovers integer alpha with alpha_7 = alpha_8 = 0") {
    RatMatrix inv = invert_generator({Family::E, 6});
    std::vector<Rational> p{2, 1, -1, 0, 0, 0, 0, -2};
    for (int i = 0; i < 8; ++i) {
        Rational alpha(0);
        for (int j = 0; j < 8; ++j) alpha += inv[i][j] * p[j];
        CHECK(alpha.get_den() == 1);
        if (i >= 6) CHECK(alpha == 0);
    }
}

TEST_CASE("lattice points G*alpha satisfy the membership predicate") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (auto spec : std::vector<LatticeSpec>{{Family::A, 4},
                                              {Family::D, 3},
                                              {Family::D, 6},
                                              {Family::E, 6},
                                              {Family::E, 7},
                                              {Family::E, 8}}) {
        RatMatrix g = generator_matrix(spec);
        MembershipPredicate pred = membership_predicate(spec);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<long> alpha(spec.rank);
            for (auto& a : alpha) a = coeff(rng);
            // Half-integer generator columns need an even coefficient for an
            // integer point.
            if (spec.family == Family::E) alpha[spec.rank - 1] *= 2;
            std::vector<long> p(pred.ambient_dim, 0);
            bool integral = true;
            for (int i = 0; i < pred.ambient_dim; ++i) {
                Rational v(0);
                for (int j = 0; j < spec.rank; ++j) v += g[i][j] * alpha[j];
                if (v.get_den() != 1) integral = false;
                else p[i] = v.get_num().get_si();
            }
            REQUIRE(integral);
            CHECK(pred.accepts(p));
            // Predicates are symmetric under negation.
            std::vector<long> neg(p);
            for (auto& v : neg) v = -v;
            CHECK(pred.accepts(neg));
        }
    }
}
