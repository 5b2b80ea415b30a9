#include "plb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "plb/bounds.hpp"
#include "plb/embed.hpp"
#include "plb/oracles.hpp"
#include "plb/plb_check.hpp"
#include "plb/rng.hpp"
#include "plb/solvers.hpp"

namespace plb {

Graph generate(const GenSpec& spec, std::uint64_t seed) {
    if (spec.model == "chung-lu")
        return gen_chung_lu(power_law_weights(spec.n, spec.beta_prime, spec.w_min), seed);
    if (spec.model == "girg") {
        GirgParams p;
        p.dim = spec.dim;
        p.alpha = spec.alpha;
        p.weights = power_law_weights(spec.n, spec.beta_prime, spec.w_min);
        return gen_girg(p, seed);
    }
    if (spec.model == "hyperbolic") {
        HyperbolicParams p;
        p.alpha_h = spec.alpha_h;
        p.c_h = spec.c_h;
        p.t_h = spec.t_h;
        p.n = spec.n;
        return gen_hyperbolic(p, seed);
    }
    if (spec.model == "abplg") return gen_alpha_beta_plg(spec.e_alpha, spec.beta_gen, seed, spec.simple);
    throw std::invalid_argument("unknown model: " + spec.model);
}

std::optional<double> ccdf_tail_slope(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::uint64_t dmax = g.max_degree();
    if (dmax < 100) return std::nullopt;
    std::vector<std::uint64_t> at_least(dmax + 2, 0);
    for (Vertex v = 0; v < n; ++v) ++at_least[g.degree(v)];
    for (std::uint64_t k = dmax; k-- > 0;) at_least[k] += at_least[k + 1];

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (std::uint64_t k = 10; k <= dmax / 10; ++k) {
        if (at_least[k] == 0) continue;
        double x = std::log2(static_cast<double>(k));
        double y = std::log2(static_cast<double>(at_least[k]) / static_cast<double>(n));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 3) return std::nullopt;
    double denom = count * sxx - sx * sx;
    if (denom == 0) return std::nullopt;
    return (count * sxy - sx * sy) / denom;
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2;
}

ExperimentReport run_experiment(const GenSpec& spec, double beta, double t,
                                const std::vector<std::uint64_t>& seeds, int jobs) {
    if (seeds.empty()) throw std::invalid_argument("run_experiment: need at least one seed");
    ExperimentReport rep;
    rep.spec = spec;
    rep.beta = beta;
    rep.t = t;
    rep.seeds = seeds;
    rep.per_trial.resize(seeds.size());

    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string error_msg;
    std::mutex error_mu;

    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= seeds.size() || failed.load()) return;
            try {
                Graph g = generate(spec, seeds[i]);
                TrialStats& ts = rep.per_trial[i];
                ts.seed = seeds[i];
                ts.n = g.num_vertices();
                ts.m = g.num_edges();
                ts.max_degree = g.max_degree();
                ts.c1_fit = fit_plb_u(g, beta, t);
                ts.c2_fit = fit_plb_l(g, beta, t);
                ts.c3_fit = fit_plb_n(g, beta, t).first;
                ts.tail_slope = ccdf_tail_slope(g);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                failed.store(true);
                error_msg = "seed " + std::to_string(seeds[i]) + ": " + e.what();
            }
        }
    };

    int threads = std::max(1, std::min<int>(jobs, static_cast<int>(seeds.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error("run_experiment: " + error_msg);

    std::vector<double> c1s, c2s, c3s, slopes;
    for (const auto& ts : rep.per_trial) {
        c1s.push_back(ts.c1_fit);
        c2s.push_back(ts.c2_fit);
        c3s.push_back(ts.c3_fit);
        if (ts.tail_slope) slopes.push_back(*ts.tail_slope);
    }
    rep.aggregates.c1_median = median(c1s);
    rep.aggregates.c1_max = *std::max_element(c1s.begin(), c1s.end());
    rep.aggregates.c2_median = median(c2s);
    rep.aggregates.c2_min = *std::min_element(c2s.begin(), c2s.end());
    rep.aggregates.c3_median = median(c3s);
    rep.aggregates.c3_max = *std::max_element(c3s.begin(), c3s.end());
    if (!slopes.empty()) rep.aggregates.tail_slope_median = median(slopes);
    return rep;
}

namespace {

double harmonic(std::uint64_t k) {
    double h = 0;
    for (std::uint64_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

}  // namespace

std::vector<RatioRow> ratio_study_on(const std::vector<std::pair<std::string, Graph>>& instances,
                                     double beta, double t) {
    std::vector<RatioRow> rows;
    for (const auto& [id, g] : instances) {
        if (g.has_isolated_vertex()) {
            RatioRow row;
            row.instance_id = id;
            row.skipped = true;
            row.reason = "isolated";
            rows.push_back(row);
            continue;
        }
        const auto n = static_cast<double>(g.num_vertices());
        double c1 = fit_plb_u(g, beta, t);
        auto bundle = bounds::guarantee_bundle(bounds::Scalar::from_double(c1),
                                               bounds::Scalar::from_double(beta),
                                               bounds::Scalar::from_double(t));
        auto opt_mds = exact_mds(g);
        auto opt_vc = exact_mvc(g);
        auto greedy = greedy_mds(g);
        auto mis = greedy_mis(g);

        auto push = [&](const std::string& check, double measured, double reference, double ratio,
                        double bound, bool ok) {
            rows.push_back({id, check, measured, reference, ratio, bound, ok, false, ""});
        };

        double gsize = static_cast<double>(greedy.solution.size());
        double opt = static_cast<double>(opt_mds.size);
        push("greedy-mds-ratio", gsize, opt, gsize / opt, bundle.greedy_ds_ratio.value,
             gsize <= bundle.greedy_ds_ratio.value * opt);

        double fraction = bundle.mds_lb_fraction.value;
        push("mds-lower", opt, n, opt / n, fraction, opt >= fraction * n);
        double mis_size = static_cast<double>(mis.solution.size());
        push("mis-lower", mis_size, n, mis_size / n, fraction, mis_size >= fraction * n);
        double vc_size = static_cast<double>(opt_vc.size);
        push("vc-lower", vc_size, n, vc_size / n, fraction, vc_size >= fraction * n);

        double hsum = 0;
        for (Vertex v : opt_mds.witness) hsum += harmonic(g.degree(v) + 1);
        push("harmonic", gsize, opt, gsize / opt, hsum, gsize <= hsum);
    }
    return rows;
}

std::vector<RatioRow> ratio_study(StudyFamily family, std::size_t count, std::size_t size,
                                  double beta, double t, std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> instances;
    if (family == StudyFamily::RandomPlb) {
        // resample until connected with minimum degree >= 1
        std::uint64_t attempt = 0;
        while (instances.size() < count) {
            std::uint64_t sub = mix64(seed + 0x9e3779b97f4a7c15ULL * ++attempt);
            Graph g = gen_chung_lu(power_law_weights(size, 3.0, 3.0), sub);
            if (g.has_isolated_vertex() || !g.is_connected()) continue;
            instances.emplace_back("random-plb-" + std::to_string(instances.size()), std::move(g));
            if (attempt > 1000 * count) throw std::runtime_error("ratio_study: rejection sampling stalled");
        }
    } else {
        std::size_t cubic_n = size - size % 2;
        if (cubic_n < 4) throw std::invalid_argument("ratio_study: embedded family needs size >= 4");
        for (std::size_t i = 0; i < count; ++i) {
            Graph cubic = random_cubic_graph(cubic_n, mix64(seed + 31 * i + 7));
            auto emb = embed_multigraph(cubic, beta, t, 0.02);
            instances.emplace_back("embedded-" + std::to_string(i), std::move(emb.graph));
        }
    }
    return ratio_study_on(instances, beta, t);
}

}  // namespace plb
