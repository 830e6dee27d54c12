#include <doctest.h>

#include "latcount/closed_form.hpp"
#include "latcount/oracle.hpp"

using namespace latcount;

TEST_CASE("p-space bulk counts reproduce the published sequences") {
    CHECK(count_bulk_pspace({{Family::D, 2}, 1}) == 5);
    CHECK(count_bulk_pspace({{Family::A, 2}, 1}) == 7);
    CHECK(count_bulk_pspace({{Family::E, 6}, 1}) == 423);
    CHECK(count_bulk_pspace({{Family::D, 3}, 2}) == 63);
    CHECK(count_bulk_pspace({{Family::Z, 4}, 1}) == 81);
    CHECK(count_bulk_pspace({{Family::Dstar, 3}, 1}) == 27);
}

TEST_CASE("alpha-space bulk counts") {
    CHECK(count_bulk_alphaspace({{Family::A, 3}, 1}) == 19);
    for (auto spec : std::vector<LatticeSpec>{
             {Family::A, 2}, {Family::D, 4}, {Family::E, 7}, {Family::Z, 2}})
        CHECK(count_bulk_alphaspace({spec, 0}) == 1);
    OracleConfig full{{Family::Dstar, 2}, 1, OracleMode::full_lattice};
    CHECK(count_bulk_alphaspace(full) == 13);
    // Integer-point mode drops the half-integer points again.
    CHECK(count_bulk_alphaspace({{Family::Dstar, 2}, 1}) == 9);
}

TEST_CASE("alpha-space agrees with p-space in integer-point mode") {
    std::vector<LatticeSpec> specs;
    for (int k = 1; k <= 5; ++k) specs.push_back({Family::A, k});
    for (int k = 2; k <= 5; ++k) specs.push_back({Family::D, k});
    for (int k = 2; k <= 4; ++k) specs.push_back({Family::Dstar, k});
    specs.push_back({Family::E, 6});
    specs.push_back({Family::E, 7});
    specs.push_back({Family::E, 8});
    for (int k = 1; k <= 4; ++k) specs.push_back({Family::Z, k});
    for (const auto& spec : specs)
        for (long n = 0; n <= 2; ++n) {
            OracleConfig cfg{spec, n};
            CHECK(count_bulk_pspace(cfg) == count_bulk_alphaspace(cfg));
        }
    // One larger instance.
    OracleConfig big{{Family::A, 6}, 3};
    CHECK(count_bulk_pspace(big) == count_bulk_alphaspace(big));
}

TEST_CASE("surface counts") {
    CHECK(count_surface({{Family::D, 4}, 1}) == 40);
    CHECK(count_surface({{Family::A, 4}, 2}) == 330);
    CHECK(count_surface({{Family::E, 8}, 0}) == 1);
}

TEST_CASE("bulk counts increase strictly with n") {
    for (auto spec : std::vector<LatticeSpec>{{Family::A, 3}, {Family::D, 4}, {Family::E, 6}}) {
        BigInt prev = -1;
        for (long n = 0; n <= 3; ++n) {
            BigInt cur = count_bulk_pspace({spec, n});
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("parity complement over the full hypercube") {
    for (int k = 1; k <= 4; ++k)
        for (long n = 0; n <= 3; ++n) {
            BigInt even = count_bulk_pspace({{Family::D, std::max(k, 2)}, n});
            if (k >= 2) {
                BigInt total = count_bulk_pspace({{Family::Z, k}, n});
                CHECK(even + v_odd(k, n) == total);
            }
        }
}

TEST_CASE("budget errors are explicit") {
    OracleConfig cfg{{Family::Z, 8}, 3};
    cfg.budget = 1000;
    CHECK_THROWS_AS(count_bulk_pspace(cfg), BudgetExceeded);
    OracleConfig acfg{{Family::E, 7}, 2};
    acfg.budget = 10;
    CHECK_THROWS_AS(count_bulk_alphaspace(acfg), BudgetExceeded);
}

TEST_CASE("p-space oracle rejects full-lattice mode") {
    OracleConfig cfg{{Family::Dstar, 2}, 1, OracleMode::full_lattice};
    CHECK_THROWS_AS(count_bulk_pspace(cfg), std::invalid_argument);
}
