#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "plb/generators.hpp"
#include "plb/graph.hpp"
#include "plb/weights.hpp"

using namespace plb;

namespace {

std::string edge_list_bytes(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

}  // namespace

TEST_CASE("chung-lu edge probabilities") {
    SUBCASE("w=(1,1): p = 1/2, binomial over many seeds") {
        auto ws = make_weight_sequence({1.0, 1.0}, 3);
        int present = 0;
        const int trials = 10000;
        for (int s = 0; s < trials; ++s)
            present += gen_chung_lu(ws, static_cast<std::uint64_t>(s)).num_edges() > 0 ? 1 : 0;
        // 3 sigma around p = 0.5: sigma = sqrt(0.25 * trials) = 50
        CHECK(present > 5000 - 150);
        CHECK(present < 5000 + 150);
    }
    SUBCASE("w=(3,3): clamped probability 1") {
        auto ws = make_weight_sequence({3.0, 3.0}, 3);
        for (std::uint64_t s : {1u, 2u, 3u, 99u})
            CHECK(gen_chung_lu(ws, s).num_edges() == 1);
    }
    SUBCASE("per-pair frequency within 3 sigma on a triangle-with-weights") {
        auto ws = make_weight_sequence({2.0, 1.5, 1.0}, 3);  // W = 4.5
        const int trials = 10000;
        int count01 = 0, count02 = 0, count12 = 0;
        for (int s = 0; s < trials; ++s) {
            Graph g = gen_chung_lu(ws, 777000 + static_cast<std::uint64_t>(s));
            count01 += g.adjacent(0, 1);
            count02 += g.adjacent(0, 2);
            count12 += g.adjacent(1, 2);
        }
        auto within = [&](int count, double p) {
            double sigma = std::sqrt(p * (1 - p) * trials);
            return std::fabs(count - p * trials) <= 3 * sigma;
        };
        CHECK(within(count01, 3.0 / 4.5));
        CHECK(within(count02, 2.0 / 4.5));
        CHECK(within(count12, 1.5 / 4.5));
    }
    SUBCASE("constant weights give the expected mean degree at scale") {
        std::vector<double> w(10000, 5.0);
        auto ws = make_weight_sequence(std::move(w), 3);
        for (std::uint64_t s = 1; s <= 20; ++s) {
            Graph g = gen_chung_lu(ws, s);
            double mean = 2.0 * static_cast<double>(g.num_edges()) / 10000.0;
            CHECK(mean > 4.5);
            CHECK(mean < 5.5);
        }
    }
}

TEST_CASE("generator determinism") {
    auto ws = power_law_weights(300, 3, 1.5);
    CHECK(edge_list_bytes(gen_chung_lu(ws, 42)) == edge_list_bytes(gen_chung_lu(ws, 42)));
    CHECK(edge_list_bytes(gen_chung_lu(ws, 42)) != edge_list_bytes(gen_chung_lu(ws, 43)));

    GirgParams gp{1, 2.0, power_law_weights(300, 3, 1.5)};
    CHECK(edge_list_bytes(gen_girg(gp, 7)) == edge_list_bytes(gen_girg(gp, 7)));

    HyperbolicParams hp{0.75, 0, 0.1, 300};
    CHECK(edge_list_bytes(gen_hyperbolic(hp, 7)) == edge_list_bytes(gen_hyperbolic(hp, 7)));
    CHECK(edge_list_bytes(gen_hyperbolic(hp, 7)) != edge_list_bytes(gen_hyperbolic(hp, 8)));

    CHECK(edge_list_bytes(gen_alpha_beta_plg(500, 2.5, 11, false)) ==
          edge_list_bytes(gen_alpha_beta_plg(500, 2.5, 11, false)));
}

TEST_CASE("positions are re-derivable from the seed alone") {
    auto p1 = girg_positions(100, 2, 5);
    auto p2 = girg_positions(100, 2, 5);
    CHECK(p1 == p2);
    HyperbolicParams hp{0.8, 0, 0.2, 100};
    auto h1 = hyperbolic_positions(hp, 5);
    auto h2 = hyperbolic_positions(hp, 5);
    REQUIRE(h1.size() == h2.size());
    for (std::size_t i = 0; i < h1.size(); ++i) {
        CHECK(h1[i].r == h2[i].r);
        CHECK(h1[i].phi == h2[i].phi);
        CHECK(h1[i].r >= 0);
        CHECK(h1[i].r <= hp.r_disk());
        CHECK(h1[i].phi >= 0);
        CHECK(h1[i].phi < 2 * M_PI);
    }
}

TEST_CASE("girg edge probability formula") {
    CHECK(girg_edge_probability(1.0, 0.5, 2, 1) == 1.0);          // (1/(1/2)^2) * 1 clamps
    CHECK(girg_edge_probability(0.3, 0.0, 2, 1) == 1.0);          // identical positions
    CHECK(girg_edge_probability(0.01, 0.5, 2, 1) == doctest::Approx(4e-4).epsilon(1e-12));
    CHECK(girg_edge_probability(0.01, 0.5, 3, 2) ==
          doctest::Approx(std::pow(0.01 / 0.25, 3)).epsilon(1e-12));
}

TEST_CASE("torus metric") {
    double a[2] = {0.1, 0.9}, b[2] = {0.9, 0.1};
    CHECK(torus_distance(a, b, 2) == doctest::Approx(0.2).epsilon(1e-12));  // wraps both ways
    CHECK(torus_distance(a, a, 2) == 0.0);
    double c[1] = {0.0}, d[1] = {0.5};
    CHECK(torus_distance(c, d, 1) == doctest::Approx(0.5));
}

TEST_CASE("hyperbolic connection law") {
    CHECK(hyperbolic_edge_probability(10.0, 10.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(hyperbolic_edge_probability(0.0, 40.0, 1.0) ==
          doctest::Approx(1.0 / (1 + std::exp(-20.0))).epsilon(1e-12));
    PolarPoint u{1.0, 0.0}, v{1.0, 0.0};
    CHECK(hyperbolic_distance(u, v) < 1e-7);  // identical points, up to acosh rounding
    PolarPoint o1{0.0, 0.0}, o2{0.0, 1.0};
    CHECK(hyperbolic_distance(o1, o2) == 0.0);  // x < 1 guard clamps to 0
    PolarPoint w{2.0, M_PI};
    CHECK(hyperbolic_distance(u, w) == doctest::Approx(std::acosh(std::cosh(1) * std::cosh(2) +
                                                                  std::sinh(1) * std::sinh(2))));
}

TEST_CASE("alpha-beta power-law graph") {
    SUBCASE("target histogram for e^alpha=1000, beta=3") {
        auto y = abplg_target_histogram(1000, 3);
        REQUIRE(y.size() == 11);  // Delta = 10
        std::vector<std::uint64_t> want{0, 1000, 125, 37, 15, 8, 4, 2, 1, 1, 1};
        CHECK(y == want);
        std::uint64_t n = 0;
        for (auto c : y) n += c;
        CHECK(n == 1194);
    }
    SUBCASE("smallest instance: parity vertex appended") {
        Graph g = gen_alpha_beta_plg(1, 2, 5, false);
        CHECK(g.num_vertices() == 2);
        CHECK(g.degree(0) == 1);
        CHECK(g.degree(1) == 1);
    }
    SUBCASE("multigraph mode realizes the histogram exactly") {
        auto y = abplg_target_histogram(2000, 2.5);
        std::uint64_t stubs = 0, n = 0;
        for (std::size_t i = 1; i < y.size(); ++i) {
            stubs += i * y[i];
            n += y[i];
        }
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            Graph g = gen_alpha_beta_plg(2000, 2.5, seed, false);
            std::vector<std::uint64_t> got(y.size(), 0);
            std::uint64_t isolated_fix = stubs % 2;
            CHECK(g.num_vertices() == n + isolated_fix);
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                auto d = g.degree(v);
                if (d == 1 && isolated_fix && v == g.num_vertices() - 1) continue;  // parity vertex
                REQUIRE(d < got.size());
                ++got[d];
            }
            for (std::size_t i = 1; i < y.size(); ++i) CHECK(got[i] == y[i]);
        }
    }
    SUBCASE("simple mode erases parallels and loops") {
        Graph g = gen_alpha_beta_plg(3000, 2.2, 9, true);
        CHECK(g.is_simple());
    }
    SUBCASE("beta <= 1 rejected") {
        CHECK_THROWS_AS(gen_alpha_beta_plg(100, 1.0, 1, false), std::invalid_argument);
        CHECK_THROWS_AS(gen_alpha_beta_plg(0.5, 2, 1, false), std::invalid_argument);
    }
}

TEST_CASE("random cubic graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        std::size_t n = 4 + 2 * (seed % 5);
        Graph g = random_cubic_graph(n, seed);
        CHECK(g.num_vertices() == n);
        CHECK(g.is_simple());
        for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == 3);
    }
    CHECK_THROWS_AS(random_cubic_graph(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_cubic_graph(2, 1), std::invalid_argument);
}
