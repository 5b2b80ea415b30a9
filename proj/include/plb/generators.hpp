#pragma once

#include <cstdint>
#include <vector>

#include "plb/graph.hpp"
#include "plb/weights.hpp"

namespace plb {

struct GirgParams {
    int dim = 1;          // torus dimension, >= 1
    double alpha = 2;     // decay exponent, > 1
    WeightSequence weights;
};

struct HyperbolicParams {
    double alpha_h = 0.75;  // radial dispersion, > 0
    double c_h = 0;         // radius offset
    double t_h = 0.1;       // temperature, > 0
    std::size_t n = 0;
    double r_disk() const;  // R = 2 ln n + C_H
};

// Every generator is a pure function of (params, seed): identical inputs give
// byte-identical edge lists. Vertex positions come from a dedicated RNG
// stream, so they are re-derivable from the seed without sampling any edges.

// each pair {i,j} independently with probability min(1, w_i w_j / W)
Graph gen_chung_lu(const WeightSequence& ws, std::uint64_t seed);

// positions uniform on the d-torus, pair probability
// min{1, (w_u w_v / W)^alpha / ||x_u - x_v||^{alpha d}} with the L-inf metric
Graph gen_girg(const GirgParams& p, std::uint64_t seed);

// polar positions in a hyperbolic disk of radius R, logistic connection
// probability 1/(1 + e^{(d(u,v)-R)/(2 T_H)})
Graph gen_hyperbolic(const HyperbolicParams& p, std::uint64_t seed);

// Degree sequence with floor(e_alpha / i^beta) vertices of degree i,
// 1 <= i <= floor(e_alpha^{1/beta}), realized by configuration-model stub
// pairing. Loops are repaired by re-drawing; with simple=true parallel edges
// collapse and surviving loops are erased (erased configuration model).
// An extra degree-1 vertex is appended when the stub count is odd.
Graph gen_alpha_beta_plg(double e_alpha, double beta, std::uint64_t seed, bool simple);

// uniform-ish random simple cubic graph via rejection; n even, >= 4
Graph random_cubic_graph(std::size_t n, std::uint64_t seed);

// exposed pieces, used by tests and the experiment harness
std::vector<double> girg_positions(std::size_t n, int dim, std::uint64_t seed);  // n*dim, row-major
struct PolarPoint {
    double r, phi;
};
std::vector<PolarPoint> hyperbolic_positions(const HyperbolicParams& p, std::uint64_t seed);
double torus_distance(const double* a, const double* b, int dim);
double girg_edge_probability(double weight_term, double distance, double alpha, int dim);
double hyperbolic_distance(const PolarPoint& u, const PolarPoint& v);
double hyperbolic_edge_probability(double distance, double R, double t_h);
// target counts y_i of degree i, index 0 unused
std::vector<std::uint64_t> abplg_target_histogram(double e_alpha, double beta);

}  // namespace plb
