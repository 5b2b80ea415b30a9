#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "plb/bounds.hpp"

using namespace plb::bounds;

namespace {

Scalar dec(const std::string& s) { return Scalar::from_decimal(s); }

void check_exact(const Scalar& s, const std::string& want) {
    REQUIRE(s.exact.has_value());
    CHECK(rational_to_string(*s.exact) == want);
}

// expected values below were computed independently with 30-digit arithmetic

}  // namespace

TEST_CASE("const_a") {
    auto a30 = const_a(dec("3"), dec("0"));
    CHECK(a30.value == doctest::Approx(11.0 / 3).epsilon(1e-12));
    check_exact(a30, "11/3");

    auto a31 = const_a(dec("3"), dec("1"));
    CHECK(a31.value == doctest::Approx(4.6).epsilon(1e-12));
    check_exact(a31, "23/5");

    auto a25 = const_a(dec("2.5"), dec("0"));
    CHECK(a25.value == doctest::Approx(5.6407544820340815).epsilon(1e-12));
    CHECK(!a25.exact.has_value());  // irrational power

    CHECK_THROWS_AS(const_a(dec("2"), dec("0")), std::invalid_argument);
    CHECK_THROWS_AS(const_a(dec("1.5"), dec("0")), std::invalid_argument);
}

TEST_CASE("const_b") {
    auto b = const_b(dec("1"), dec("3"), dec("0"));
    CHECK(b.value == doctest::Approx(16.0).epsilon(1e-12));
    check_exact(b, "16");

    auto b2 = const_b(dec("2"), dec("3"), dec("0"));
    CHECK(b2.value == doctest::Approx(32.0).epsilon(1e-12));
    check_exact(b2, "32");

    auto b25 = const_b(dec("1"), dec("2.5"), dec("0"));
    CHECK(b25.value == doctest::Approx(288.0).epsilon(1e-12));
    check_exact(b25, "288");  // (3 * 2^2.5)^2 = 9 * 32

    auto b31 = const_b(dec("1"), dec("3"), dec("1"));
    CHECK(b31.value == doctest::Approx(64.0).epsilon(1e-12));
    check_exact(b31, "64");

    CHECK_THROWS_AS(const_b(dec("1"), dec("2"), dec("0")), std::invalid_argument);
    CHECK_THROWS_AS(const_b(dec("0"), dec("3"), dec("0")), std::invalid_argument);
}

TEST_CASE("guarantee bundle") {
    SUBCASE("c1=1, beta=3, t=0") {
        auto g = guarantee_bundle(dec("1"), dec("3"), dec("0"));
        CHECK(g.mds_lb_fraction.value == doctest::Approx(3.0 / 355).epsilon(1e-12));
        check_exact(g.mds_lb_fraction, "3/355");
        CHECK(g.greedy_ds_ratio.value == doctest::Approx(16.218802601152505).epsilon(1e-12));
        CHECK(g.cds_ratio.value == doctest::Approx(6.7735055008073061).epsilon(1e-12));
    }
    SUBCASE("c1=1, beta=3, t=1") {
        auto g = guarantee_bundle(dec("1"), dec("3"), dec("1"));
        CHECK(g.a.value == doctest::Approx(4.6).epsilon(1e-12));
        CHECK(g.b.value == doctest::Approx(64.0).epsilon(1e-12));
        CHECK(g.mds_lb_fraction.value == doctest::Approx(0.0016954899966090200).epsilon(1e-12));
        check_exact(g.mds_lb_fraction, "5/2949");
    }
    SUBCASE("fraction decreases as c1 grows") {
        double prev = 1;
        for (double c1 : {0.5, 1.0, 2.0, 8.0, 64.0}) {
            auto g = guarantee_bundle(Scalar::from_double(c1), dec("3"), dec("0"));
            CHECK(g.mds_lb_fraction.value < prev);
            CHECK(g.mds_lb_fraction.value > 0);
            prev = g.mds_lb_fraction.value;
        }
    }
}

TEST_CASE("potential volume bound") {
    // n/M = 2 reproduces the dominating-set constants
    auto linear = pvl_bound(PvlKind::Linear, 2, 1, dec("1"), dec("3"), dec("0"), 100, 50);
    CHECK(linear.value == doctest::Approx(355.0 / 3).epsilon(1e-12));
    auto logarithmic = pvl_bound(PvlKind::Log1p, std::log(5.0) / std::log(3.0), 1, dec("1"),
                                 dec("3"), dec("0"), 100, 50);
    CHECK(logarithmic.value == doctest::Approx(16.218802601152505).epsilon(1e-12));
    auto dense = pvl_bound(PvlKind::Linear, 2, 1, dec("1"), dec("3"), dec("0"), 100, 100);
    CHECK(dense.value == doctest::Approx(179.0 / 3).epsilon(1e-12));

    SUBCASE("consistency with the bundle for many parameters") {
        for (const char* c1 : {"0.5", "1", "3"})
            for (const char* beta : {"2.5", "3", "3.5"})
                for (const char* t : {"0", "1", "2"}) {
                    auto g = guarantee_bundle(dec(c1), dec(beta), dec(t));
                    auto p = pvl_bound(PvlKind::Linear, 2, 1, dec(c1), dec(beta), dec(t), 1000, 500);
                    CHECK(p.value == doctest::Approx(2 * g.a.value * g.b.value + 1).epsilon(1e-12));
                }
    }
    CHECK_THROWS_AS(pvl_bound(PvlKind::Linear, 2, 1, dec("1"), dec("3"), dec("0"), 10, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(pvl_bound(PvlKind::Linear, 2, 1, dec("1"), dec("3"), dec("0"), 10, 1000),
                    std::invalid_argument);
}

TEST_CASE("independent-set lower fraction") {
    CHECK(mis_plbl_lower(dec("0.1"), dec("3"), dec("0"), 1, false).value ==
          doctest::Approx(0.05).epsilon(1e-12));
    CHECK(mis_plbl_lower(dec("0.1"), dec("3"), dec("0"), 1, true).value ==
          doctest::Approx(0.1).epsilon(1e-12));
    CHECK(mis_plbl_lower(dec("0.1"), dec("3"), dec("0"), 2, false).value ==
          doctest::Approx(1.0 / 240).epsilon(1e-12));
    check_exact(mis_plbl_lower(dec("0.1"), dec("3"), dec("0"), 2, false), "1/240");
}

TEST_CASE("hardness factors") {
    auto c1 = dec("1");
    SUBCASE("multigraph fixtures (c2=0.05, beta=3, t=0)") {
        auto c2 = dec("0.05");
        auto ds = hardness_factor(HardnessProblem::Mds, HardnessMode::Multigraph, c1, c2, dec("3"), dec("0"), dec("0"));
        CHECK(ds.factor.value == doctest::Approx(1.0004897723998848).epsilon(1e-12));
        CHECK(ds.growth_c.value == doctest::Approx(1.1764705882352941).epsilon(1e-12));
        check_exact(ds.factor, "34727/34710");

        auto is = hardness_factor(HardnessProblem::Mis, HardnessMode::Multigraph, c1, c2, dec("3"), dec("0"), dec("0.001"));
        CHECK(is.factor.value == doctest::Approx(1.0045709685256792).epsilon(1e-12));

        auto vc = hardness_factor(HardnessProblem::Mvc, HardnessMode::Multigraph, c1, c2, dec("3"), dec("0"), dec("0"));
        CHECK(vc.factor.value == doctest::Approx(1.1135473365734120).epsilon(1e-12));
        CHECK(!vc.factor.exact.has_value());  // 10*sqrt(5) - 22 is irrational
    }
    SUBCASE("simple fixtures (c2=0.02, beta=3, t=0)") {
        auto c2 = dec("0.02");
        auto ds = hardness_factor(HardnessProblem::Mds, HardnessMode::Simple, c1, c2, dec("3"), dec("0"), dec("0"));
        CHECK(ds.factor.value == doctest::Approx(1.0013839716768587).epsilon(1e-12));
        CHECK(ds.growth_c.value == doctest::Approx(1.1627906976744186).epsilon(1e-12));

        auto is = hardness_factor(HardnessProblem::Mis, HardnessMode::Simple, c1, c2, dec("3"), dec("0"), dec("0.001"));
        CHECK(is.factor.value == doctest::Approx(1.0010905411615001).epsilon(1e-12));

        auto vc = hardness_factor(HardnessProblem::Mvc, HardnessMode::Simple, c1, c2, dec("3"), dec("0"), dec("0"));
        CHECK(vc.factor.value == doctest::Approx(1.2819860059074467).epsilon(1e-12));
    }
    SUBCASE("bracket violations rejected with the offending value") {
        CHECK_THROWS_WITH_AS(
            hardness_factor(HardnessProblem::Mds, HardnessMode::Multigraph, c1, dec("0.4"), dec("3"), dec("0"), dec("0")),
            doctest::Contains("1.2"), std::invalid_argument);
        CHECK_THROWS_AS(
            hardness_factor(HardnessProblem::Mvc, HardnessMode::Simple, c1, dec("0.2"), dec("3"), dec("0"), dec("0")),
            std::invalid_argument);
    }
    SUBCASE("mds factor is strictly decreasing in c2, toward 1 at the bracket") {
        // limit at c2 -> 0 is 1 + 1/1950 (growth constant 1); at the bracket
        // boundary the embedding growth diverges and the factor tends to 1
        double prev = 1 + 1.0 / 1950 + 1e-15;
        for (const char* c2 : {"0.001", "0.01", "0.05", "0.1", "0.2", "0.3"}) {
            auto r = hardness_factor(HardnessProblem::Mds, HardnessMode::Multigraph, c1, dec(c2), dec("3"), dec("0"), dec("0"));
            CHECK(r.factor.value < prev);
            CHECK(r.factor.value > 1);
            prev = r.factor.value;
        }
        auto near_bracket = hardness_factor(HardnessProblem::Mds, HardnessMode::Multigraph, c1,
                                            dec("0.333"), dec("3"), dec("0"), dec("0"));
        CHECK(near_bracket.factor.value - 1 < 2e-5);
    }
    SUBCASE("factors exceed 1 across modes and problems") {
        for (auto mode : {HardnessMode::Multigraph, HardnessMode::Simple})
            for (auto prob : {HardnessProblem::Mds, HardnessProblem::Mis, HardnessProblem::Mvc}) {
                auto r = hardness_factor(prob, mode, c1, dec("0.03"), dec("2.8"), dec("1"), dec("0.0001"));
                CHECK(r.factor.value > 1);
                CHECK(r.growth_c.value > 1);
            }
    }
    SUBCASE("multigraph mode admits 1 < beta <= 2") {
        auto r = hardness_factor(HardnessProblem::Mds, HardnessMode::Multigraph, c1, dec("0.05"), dec("1.5"), dec("0"), dec("0"));
        CHECK(r.factor.value > 1);
        CHECK_THROWS_AS(
            hardness_factor(HardnessProblem::Mds, HardnessMode::Simple, c1, dec("0.05"), dec("1.5"), dec("0"), dec("0")),
            std::invalid_argument);
    }
    SUBCASE("exact and float paths agree") {
        for (const char* c2 : {"0.01", "0.05", "0.1"})
            for (auto mode : {HardnessMode::Multigraph, HardnessMode::Simple})
                for (auto prob : {HardnessProblem::Mds, HardnessProblem::Mis}) {
                    auto r = hardness_factor(prob, mode, c1, dec(c2), dec("3"), dec("1"), dec("0.002"));
                    REQUIRE(r.factor.exact.has_value());
                    CHECK(r.factor.value == doctest::Approx(to_double(*r.factor.exact)).epsilon(1e-12));
                }
    }
}

TEST_CASE("lemma22 summation bound") {
    auto one = lemma22_bound(1, 2, dec("1"));
    CHECK(one.lhs.value == doctest::Approx(1.0));
    CHECK(one.rhs.value == doctest::Approx(2.0));
    check_exact(one.rhs, "2");

    auto two = lemma22_bound(2, 4, dec("2"));
    CHECK(two.lhs.value == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(two.rhs.value == doctest::Approx(0.43209876543209876).epsilon(1e-12));
    check_exact(two.lhs, "1/4");
    check_exact(two.rhs, "35/81");  // (8/3) * (1/8 + 1/27)

    auto four = lemma22_bound(4, 8, dec("1"));
    CHECK(four.lhs.value == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(four.rhs.value == doctest::Approx(0.30137188208616780).epsilon(1e-12));

    CHECK_THROWS_AS(lemma22_bound(3, 4, dec("1")), std::invalid_argument);
    CHECK_THROWS_AS(lemma22_bound(0, 4, dec("1")), std::invalid_argument);

    SUBCASE("inequality holds on a sweep") {
        for (unsigned a = 1; a <= 16; ++a)
            for (unsigned b = 2 * a; b <= 64; b += 3)
                for (double c : {0.5, 1.0, 2.0, 3.0}) {
                    auto r = lemma22_bound(a, b, Scalar::from_double(c));
                    CHECK(r.lhs.value <= r.rhs.value);
                }
    }
}

TEST_CASE("log3(5) doubling constant") {
    // 15-digit reference for the logarithmic doubling constant used by the
    // greedy dominating-set ratio
    CHECK(std::log(5.0) / std::log(3.0) == doctest::Approx(1.46497352071793).epsilon(1e-14));
}

TEST_CASE("zeta helper") {
    CHECK(zeta(2) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-12));
    CHECK(zeta(3) == doctest::Approx(1.2020569031595943).epsilon(1e-12));
    CHECK(zeta(4) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-12));
    CHECK_THROWS_AS(zeta(1.0), std::invalid_argument);
}

TEST_CASE("decimal parsing") {
    CHECK(rational_to_string(rational_from_decimal("0.05")) == "1/20");
    CHECK(rational_to_string(rational_from_decimal("-2.5")) == "-5/2");
    CHECK(rational_to_string(rational_from_decimal("3")) == "3");
    CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
}
