#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "plb/weights.hpp"

using namespace plb;

TEST_CASE("quantile weight construction") {
    SUBCASE("n=4, beta'=3: (2, sqrt2, sqrt(4/3), 1)") {
        auto ws = power_law_weights(4, 3, 1);
        REQUIRE(ws.size() == 4);
        CHECK(ws.w[0] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(ws.w[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(ws.w[2] == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
        CHECK(ws.w[3] == 1.0);
    }
    SUBCASE("single element") {
        auto ws = power_law_weights(1, 3, 1);
        REQUIRE(ws.size() == 1);
        CHECK(ws.w[0] == 1.0);
    }
    SUBCASE("tail count inverts the quantile formula") {
        auto ws = power_law_weights(10000, 2.5, 1);
        CHECK(count_at_least(ws, 10.0) == 316);
    }
    SUBCASE("non-increasing, exact minimum") {
        auto ws = power_law_weights(1000, 2.7, 2);
        for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws.w[i] <= ws.w[i - 1]);
        CHECK(ws.w.back() == 2.0);
        CHECK(ws.w_min == 2.0);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(power_law_weights(10, 2.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(power_law_weights(10, 1.5, 1), std::invalid_argument);
        CHECK_THROWS_AS(power_law_weights(0, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(power_law_weights(10, 3, 0.5), std::invalid_argument);
    }
}

TEST_CASE("counting identity against brute force") {
    auto ws = power_law_weights(500, 3, 1);
    for (double w : {1.0, 1.3, 2.0, 5.0, 10.0, 22.360679, 30.0}) {
        std::size_t brute = 0;
        for (double x : ws.w)
            if (x >= w) ++brute;
        CHECK(count_at_least(ws, w) == brute);
    }
}

TEST_CASE("general power-law verification") {
    SUBCASE("quantile weights pass") {
        auto ws = power_law_weights(10000, 3, 1);
        double w_bar = std::pow(1e4, 1.0 / 3.0);
        auto rep = verify_general_power_law(ws, 0.5, w_bar);
        CHECK(rep.pass);
        CHECK(rep.c1_fit > 0);
        CHECK(rep.c2_fit > 0);
    }
    SUBCASE("quantile weights pass at the default threshold") {
        auto ws = power_law_weights(2000, 2.6, 1);
        auto rep = verify_general_power_law(ws, 0.3, *ws.w_bar);
        CHECK(rep.pass);
    }
    SUBCASE("constant weights fail the lower inequality beyond their maximum") {
        std::vector<double> flat(1000, 5.0);
        auto ws = make_weight_sequence(std::move(flat), 3);
        auto rep = verify_general_power_law(ws, 0.5, std::pow(1000.0, 0.5));
        CHECK(!rep.pass);
        CHECK(rep.c1_fit == 0);
    }
    SUBCASE("single weight") {
        auto ws = power_law_weights(1, 3, 1);
        auto rep = verify_general_power_law(ws, 0.5, 1.0);
        CHECK(rep.c1_fit == doctest::Approx(1.0));
        CHECK(rep.c2_fit == doctest::Approx(1.0));
        CHECK(rep.pass);
    }
    SUBCASE("eta precondition") {
        auto ws = power_law_weights(10, 3, 1);
        CHECK_THROWS_AS(verify_general_power_law(ws, 1.5, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(verify_general_power_law(ws, 0.0, 2.0), std::invalid_argument);
    }
    SUBCASE("empty sequence rejected") {
        WeightSequence empty;
        empty.beta_prime = 3;
        CHECK_THROWS_AS(verify_general_power_law(empty, 0.5, 2.0), std::invalid_argument);
    }
}

TEST_CASE("weight sequence validation and export") {
    CHECK_THROWS_AS(make_weight_sequence({1.0, 2.0}, 3), std::invalid_argument);  // increasing
    CHECK_THROWS_AS(make_weight_sequence({1.0, -1.0}, 3), std::invalid_argument);
    auto ws = make_weight_sequence({3.0, 2.0, 1.0}, 3);
    CHECK(ws.total == doctest::Approx(6.0));
    std::ostringstream out;
    write_weights(ws, out);
    CHECK(out.str() == "3\n2\n1\n");
}
