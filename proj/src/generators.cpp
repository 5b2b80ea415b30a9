#include "plb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "plb/rng.hpp"

namespace plb {

double HyperbolicParams::r_disk() const {
    return 2 * std::log(static_cast<double>(n)) + c_h;
}

Graph gen_chung_lu(const WeightSequence& ws, std::uint64_t seed) {
    const std::size_t n = ws.size();
    Graph g(n);
    const double inv_w = 1.0 / ws.total;
    Rng rng = derive_rng(seed, stream::edges);
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = ws.w[i] * inv_w;
        for (std::size_t j = i + 1; j < n; ++j) {
            double p = wi * ws.w[j];
            if (p >= 1) {
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            } else if (rng.next_double() < p) {
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return g;
}

std::vector<double> girg_positions(std::size_t n, int dim, std::uint64_t seed) {
    Rng rng = derive_rng(seed, stream::positions);
    std::vector<double> pos(n * static_cast<std::size_t>(dim));
    for (auto& x : pos) x = rng.next_double();
    return pos;
}

double torus_distance(const double* a, const double* b, int dim) {
    double d = 0;
    for (int k = 0; k < dim; ++k) {
        double delta = std::fabs(a[k] - b[k]);
        d = std::max(d, std::min(delta, 1 - delta));
    }
    return d;
}

double girg_edge_probability(double weight_term, double distance, double alpha, int dim) {
    double dist_pow = 1;
    for (int k = 0; k < dim; ++k) dist_pow *= distance;
    if (weight_term >= dist_pow) return 1;  // covers distance 0
    return std::pow(weight_term / dist_pow, alpha);
}

Graph gen_girg(const GirgParams& p, std::uint64_t seed) {
    if (p.dim < 1) throw std::invalid_argument("gen_girg: dim must be >= 1");
    if (!(p.alpha > 1)) throw std::invalid_argument("gen_girg: alpha must be > 1");
    const std::size_t n = p.weights.size();
    const int dim = p.dim;
    std::vector<double> pos = girg_positions(n, dim, seed);
    Graph g(n);
    const double inv_w = 1.0 / p.weights.total;
    Rng rng = derive_rng(seed, stream::edges);
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = p.weights.w[i] * inv_w;
        const double* xi = pos.data() + i * dim;
        for (std::size_t j = i + 1; j < n; ++j) {
            double q = wi * p.weights.w[j];
            double dist_pow = 1;
            {
                const double* xj = pos.data() + j * dim;
                double d = torus_distance(xi, xj, dim);
                for (int k = 0; k < dim; ++k) dist_pow *= d;
            }
            if (q >= dist_pow) {
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
                continue;
            }
            double r = q / dist_pow;
            double u = rng.next_double();
            // p = r^alpha <= r for alpha > 1, so u >= r rejects without pow
            if (u >= r) continue;
            if (u < std::pow(r, p.alpha)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return g;
}

std::vector<PolarPoint> hyperbolic_positions(const HyperbolicParams& p, std::uint64_t seed) {
    Rng rng = derive_rng(seed, stream::positions);
    const double R = p.r_disk();
    const double cosh_ar = std::cosh(p.alpha_h * R);
    std::vector<PolarPoint> pts(p.n);
    for (auto& pt : pts) {
        // inverse CDF of density alpha_h sinh(alpha_h r) / (cosh(alpha_h R) - 1)
        double u = rng.next_double();
        pt.r = std::acosh(1 + u * (cosh_ar - 1)) / p.alpha_h;
        pt.phi = 2 * M_PI * rng.next_double();
    }
    return pts;
}

double hyperbolic_distance(const PolarPoint& u, const PolarPoint& v) {
    double x = std::cosh(u.r) * std::cosh(v.r) - std::sinh(u.r) * std::sinh(v.r) * std::cos(u.phi - v.phi);
    if (x < 1) return 0;  // rounding guard
    return std::acosh(x);
}

double hyperbolic_edge_probability(double distance, double R, double t_h) {
    return 1.0 / (1.0 + std::exp((distance - R) / (2 * t_h)));
}

Graph gen_hyperbolic(const HyperbolicParams& p, std::uint64_t seed) {
    if (p.n < 2) throw std::invalid_argument("gen_hyperbolic: n must be >= 2");
    if (!(p.alpha_h > 0)) throw std::invalid_argument("gen_hyperbolic: alpha_h must be > 0");
    if (!(p.t_h > 0)) throw std::invalid_argument("gen_hyperbolic: t_h must be > 0");
    const double R = p.r_disk();
    if (!(R > 0)) throw std::invalid_argument("gen_hyperbolic: disk radius 2 ln n + C_H must be positive");
    std::vector<PolarPoint> pts = hyperbolic_positions(p, seed);

    const std::size_t n = p.n;
    std::vector<double> ch(n), sh(n), cs(n), sn(n);
    for (std::size_t i = 0; i < n; ++i) {
        ch[i] = std::cosh(pts[i].r);
        sh[i] = std::sinh(pts[i].r);
        cs[i] = std::cos(pts[i].phi);
        sn[i] = std::sin(pts[i].phi);
    }

    // Outside the band R +- width the logistic is flat beyond 53-bit
    // resolution, so the decision is deterministic and needs no draw.
    const double width = 2 * p.t_h * 37.0;  // ln(2^53) ~ 36.74
    const double hi_cut = std::cosh(R + width);
    const double lo_cut = R - width > 0 ? std::cosh(R - width) : -1.0;

    Graph g(n);
    Rng rng = derive_rng(seed, stream::edges);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double x = ch[i] * ch[j] - sh[i] * sh[j] * (cs[i] * cs[j] + sn[i] * sn[j]);
            if (x >= hi_cut) continue;
            if (x <= lo_cut) {
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
                continue;
            }
            double d = x < 1 ? 0 : std::acosh(x);
            if (rng.next_double() < hyperbolic_edge_probability(d, R, p.t_h))
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return g;
}

std::vector<std::uint64_t> abplg_target_histogram(double e_alpha, double beta) {
    if (!(beta > 1)) throw std::invalid_argument("abplg: beta must be > 1");
    if (!(e_alpha >= 1)) throw std::invalid_argument("abplg: e^alpha must be >= 1");
    // Delta = floor(e_alpha^{1/beta}), computed robustly around floor ties
    auto delta = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<long double>(e_alpha), 1.0L / beta)));
    while (std::pow(static_cast<long double>(delta + 1), static_cast<long double>(beta)) <= static_cast<long double>(e_alpha)) ++delta;
    while (delta > 1 && std::pow(static_cast<long double>(delta), static_cast<long double>(beta)) > static_cast<long double>(e_alpha)) --delta;
    std::vector<std::uint64_t> y(delta + 1, 0);
    for (std::uint64_t i = 1; i <= delta; ++i)
        y[i] = static_cast<std::uint64_t>(static_cast<long double>(e_alpha) /
                                          std::pow(static_cast<long double>(i), static_cast<long double>(beta)));
    return y;
}

namespace {

Graph realize_configuration(const std::vector<std::uint64_t>& degree_of, Rng& rng, bool simple) {
    const std::size_t n = degree_of.size();
    std::vector<Vertex> stubs;
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint64_t k = 0; k < degree_of[v]; ++k) stubs.push_back(static_cast<Vertex>(v));
    if (stubs.size() % 2 != 0) throw std::logic_error("configuration model: odd stub count");

    // Fisher-Yates
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.next_below(i)]);

    // repair loops by swapping one endpoint with a random stub; a swap can
    // create a new loop elsewhere, so rescan until clean or out of attempts
    const std::size_t max_attempts = 100 * n;
    std::size_t attempts = 0;
    bool dirty = true;
    while (dirty && attempts < max_attempts) {
        dirty = false;
        for (std::size_t k = 0; k + 1 < stubs.size() && attempts < max_attempts; k += 2) {
            if (stubs[k] == stubs[k + 1]) {
                std::swap(stubs[k + 1], stubs[rng.next_below(stubs.size())]);
                ++attempts;
                dirty = true;
            }
        }
    }

    Graph g(n);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
        Vertex a = stubs[k], b = stubs[k + 1];
        if (a == b) continue;  // unrepaired loop, erased
        if (simple) {
            if (!g.adjacent(a, b)) g.add_edge(a, b);
        } else {
            g.add_edge(a, b);
        }
    }
    return g;
}

}  // namespace

Graph gen_alpha_beta_plg(double e_alpha, double beta, std::uint64_t seed, bool simple) {
    auto y = abplg_target_histogram(e_alpha, beta);
    std::vector<std::uint64_t> degree_of;
    std::uint64_t stub_count = 0;
    for (std::uint64_t i = 1; i < y.size(); ++i) {
        for (std::uint64_t k = 0; k < y[i]; ++k) degree_of.push_back(i);
        stub_count += i * y[i];
    }
    if (stub_count % 2 != 0) degree_of.push_back(1);  // parity fix
    if (degree_of.empty()) return Graph(0);
    Rng rng = derive_rng(seed, stream::pairing);
    return realize_configuration(degree_of, rng, simple);
}

Graph random_cubic_graph(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic_graph: n must be even and >= 4");
    std::vector<std::uint64_t> degree_of(n, 3);
    for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
        Rng rng = derive_rng(seed, stream::retry_base + attempt);
        std::vector<Vertex> stubs;
        stubs.reserve(3 * n);
        for (std::size_t v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(static_cast<Vertex>(v));
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
        Graph g(n);
        bool ok = true;
        for (std::size_t k = 0; ok && k + 1 < stubs.size(); k += 2) {
            Vertex a = stubs[k], b = stubs[k + 1];
            if (a == b || g.adjacent(a, b)) {
                ok = false;
                break;
            }
            g.add_edge(a, b);
        }
        if (ok) return g;
    }
    throw std::runtime_error("random_cubic_graph: pairing rejection did not converge");
}

}  // namespace plb
