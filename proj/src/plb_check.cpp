#include "plb/plb_check.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace plb {

namespace {

struct KahanSum {
    double s = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

void require_params(double beta, double t) {
    if (!(beta > 1)) throw std::invalid_argument("PLB: beta must be > 1");
    if (!(t >= 0)) throw std::invalid_argument("PLB: t must be >= 0");
}

}  // namespace

double unit_bound(int d, std::size_t n, double beta, double t) {
    KahanSum sum;
    std::uint64_t lo = 1ULL << d, hi = 1ULL << (d + 1);
    for (std::uint64_t i = lo; i < hi; ++i)
        sum.add(std::pow(static_cast<double>(i) + t, -beta));
    return static_cast<double>(n) * std::pow(t + 1, beta - 1) * sum.s;
}

double fit_plb_u(const Graph& g, double beta, double t, int* witness_bucket) {
    require_params(beta, t);
    auto buckets = degree_buckets(g);
    if (buckets.counts.empty()) throw std::invalid_argument("fit_plb_u: graph has no non-isolated vertex");
    double best = 0;
    int arg = -1;
    for (int d = 0; d < static_cast<int>(buckets.counts.size()); ++d) {
        if (buckets.counts[d] == 0) continue;
        double need = static_cast<double>(buckets.counts[d]) / unit_bound(d, g.num_vertices(), beta, t);
        if (need > best) {
            best = need;
            arg = d;
        }
    }
    if (witness_bucket) *witness_bucket = arg;
    return best;
}

double fit_plb_l(const Graph& g, double beta, double t, int* witness_bucket) {
    require_params(beta, t);
    auto buckets = degree_buckets(g);
    if (buckets.counts.empty()) throw std::invalid_argument("fit_plb_l: graph has no non-isolated vertex");
    int d_lo = bucket_of(g.min_degree_nonisolated());
    int d_hi = bucket_of(g.max_degree());
    double worst = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int d = d_lo; d <= d_hi; ++d) {
        double have = static_cast<double>(buckets.counts[d]) / unit_bound(d, g.num_vertices(), beta, t);
        if (have < worst) {
            worst = have;
            arg = d;
        }
    }
    if (witness_bucket) *witness_bucket = arg;
    return worst;
}

std::pair<double, Vertex> fit_plb_n(const Graph& g, double beta, double t) {
    require_params(beta, t);
    const std::size_t n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("fit_plb_n: need at least 2 vertices");

    // suffix[k] = sum_{i=k}^{n-1} i (i+t)^{-beta}
    std::vector<double> suffix(n + 1, 0.0);
    {
        KahanSum acc;
        for (std::size_t i = n - 1; i >= 1; --i) {
            acc.add(static_cast<double>(i) * std::pow(static_cast<double>(i) + t, -beta));
            suffix[i] = acc.s;
        }
    }
    const double log_n = std::log2(static_cast<double>(n));
    const double t_factor = std::pow(t + 1, beta - 2);

    auto adj = g.adjacency();
    double best = 0;
    Vertex arg = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t k = g.degree(v);
        if (k == 0) continue;
        std::uint64_t heavy = 0;  // neighbors of degree >= k, with multiplicity
        for (auto [u, m] : adj[v])
            if (g.degree(u) >= k) heavy += m;
        double tail = k <= n - 1 ? suffix[k] : 0.0;
        double cap = std::max(log_n, t_factor * static_cast<double>(k) * tail);
        double need = static_cast<double>(heavy) / cap;
        if (need > best) {
            best = need;
            arg = v;
        }
    }
    return {best, arg};
}

PlbReport check_plb(const Graph& g, const PlbParams& p) {
    require_params(p.beta, p.t);
    for (auto c : {p.c1, p.c2, p.c3})
        if (c && !(*c >= 0)) throw std::invalid_argument("check_plb: constants must be non-negative");

    PlbReport rep;
    rep.beta = p.beta;
    rep.t = p.t;
    rep.c1_fit = fit_plb_u(g, p.beta, p.t, &rep.witness_bucket_u);
    rep.c2_fit = fit_plb_l(g, p.beta, p.t, &rep.witness_bucket_l);
    auto [c3, worst] = fit_plb_n(g, p.beta, p.t);
    rep.c3_fit = c3;
    rep.worst_vertex = worst;

    auto buckets = degree_buckets(g);
    for (int d = 0; d < static_cast<int>(buckets.counts.size()); ++d)
        rep.per_bucket.push_back({d, buckets.counts[d], unit_bound(d, g.num_vertices(), p.beta, p.t)});

    if (p.c1) rep.pass_u = rep.c1_fit <= *p.c1;
    if (p.c2) rep.pass_l = rep.c2_fit >= *p.c2;
    if (p.c3) rep.pass_n = rep.c3_fit <= *p.c3;
    return rep;
}

}  // namespace plb
