#pragma once

#include <optional>
#include <vector>

#include "plb/graph.hpp"

namespace plb {

struct PlbParams {
    double beta = 0;  // > 1
    double t = 0;     // >= 0
    std::optional<double> c1, c2, c3;
};

struct BucketRow {
    int d = 0;
    std::uint64_t count = 0;
    double unit_bound = 0;  // n (t+1)^{beta-1} sum_{i=2^d}^{2^{d+1}-1} (i+t)^{-beta}
};

struct PlbReport {
    double beta = 0, t = 0;
    double c1_fit = 0;
    double c2_fit = 0;
    double c3_fit = 0;
    std::vector<BucketRow> per_bucket;
    std::optional<Vertex> worst_vertex;  // attains c3_fit
    int witness_bucket_u = -1;           // attains c1_fit
    int witness_bucket_l = -1;           // attains c2_fit
    std::optional<bool> pass_u, pass_l, pass_n;
};

// c1 * unit_bound(d) is the bucket cap of the upper-bound property,
// c2 * unit_bound(d) the floor of the lower-bound property.
double unit_bound(int d, std::size_t n, double beta, double t);

// smallest c1 for which every bucket count is within c1 * unit_bound
double fit_plb_u(const Graph& g, double beta, double t, int* witness_bucket = nullptr);

// largest c2 for which every bucket between floor(log d_min) and
// floor(log max_degree) holds at least c2 * unit_bound vertices;
// an empty in-range bucket forces 0
double fit_plb_l(const Graph& g, double beta, double t, int* witness_bucket = nullptr);

// smallest c3 bounding, for every degree-k vertex, the number of neighbors
// (with multiplicity) of degree >= k by
//   c3 * max(log2 n, (t+1)^{beta-2} k sum_{i=k}^{n-1} i (i+t)^{-beta})
std::pair<double, Vertex> fit_plb_n(const Graph& g, double beta, double t);

// Fits all three constants and compares against whichever of c1/c2/c3 are
// provided. Comparisons are exact <= / >= on doubles.
PlbReport check_plb(const Graph& g, const PlbParams& p);

}  // namespace plb
