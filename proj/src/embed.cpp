#include "plb/embed.hpp"

#include <cmath>
#include <stdexcept>

#include "plb/plb_check.hpp"

namespace plb {

std::string gadget_kind_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::Cycle: return "cycle";
        case GadgetKind::RegularCycle: return "regular_cycle";
        case GadgetKind::Star: return "star";
    }
    return "?";
}

double GrowthConstants::of(Problem p) const {
    switch (p) {
        case Problem::Mds: return mds;
        case Problem::Mis: return mis;
        case Problem::Mvc: return mvc;
        default: throw std::invalid_argument("growth constant only defined for mds/mis/mvc");
    }
}

Graph regular_cycle(std::size_t n, std::size_t d) {
    if (n < 3) throw std::invalid_argument("regular_cycle: n must be >= 3");
    if (d < 3) throw std::invalid_argument("regular_cycle: d must be >= 3");
    Graph g(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto a = static_cast<Vertex>(i);
        auto a_next = static_cast<Vertex>((i + 1) % n);
        g.add_edge(a, a_next);
        g.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(n + (i + 1) % n));
        g.add_edge(a, static_cast<Vertex>(n + i), static_cast<std::uint32_t>(d - 2));
    }
    return g;
}

std::size_t gadget_opt(GadgetKind kind, std::size_t n, std::size_t d, Problem problem) {
    switch (kind) {
        case GadgetKind::Cycle: {
            if (n < 2) throw std::invalid_argument("gadget_opt: cycle needs n >= 2");
            switch (problem) {
                case Problem::Mds: return (n + 2) / 3;
                case Problem::Mis: return n / 2;
                case Problem::Mvc: return (n + 1) / 2;
                default: break;
            }
            break;
        }
        case GadgetKind::RegularCycle: {
            if (n < 3) throw std::invalid_argument("gadget_opt: regular cycle needs n >= 3");
            if (d < 3) throw std::invalid_argument("gadget_opt: regular cycle needs d >= 3");
            switch (problem) {
                case Problem::Mds: {
                    std::size_t base = (2 * n + 3) / 4;
                    return n % 4 == 2 ? base + 1 : base;
                }
                case Problem::Mis: return n % 2 == 0 ? n : n - 1;
                case Problem::Mvc: return n % 2 == 0 ? n : n + 1;
                default: break;
            }
            break;
        }
        case GadgetKind::Star: {
            if (n < 2) throw std::invalid_argument("gadget_opt: star needs size >= 2");
            switch (problem) {
                case Problem::Mds: return 1;
                case Problem::Mvc: return 1;
                case Problem::Mis: return n - 1;
                default: break;
            }
            break;
        }
    }
    throw std::invalid_argument("gadget_opt: unsupported kind/problem combination");
}

namespace {

void require_cubic(const Graph& g, const char* who) {
    if (g.num_vertices() < 4) throw std::invalid_argument(std::string(who) + ": input too small to be cubic");
    if (!g.is_simple()) throw std::invalid_argument(std::string(who) + ": input must be simple");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + ", input must be 3-regular");
}

std::size_t ceil_count(double bound) {
    // smallest integer count satisfying count >= bound
    auto c = static_cast<std::size_t>(std::ceil(bound - 1e-9));
    return c;
}

int target_top_bucket(std::size_t N, double beta) {
    double delta = std::ceil(std::pow(static_cast<double>(N), 1.0 / (beta - 1)));
    int d = bucket_of(static_cast<std::uint64_t>(std::max(2.0, delta)));
    return std::max(d, 1);
}

// appends a cycle over fresh vertices; size 2 becomes a double edge
void append_cycle(Graph& g, Vertex first, std::size_t size) {
    if (size == 2) {
        g.add_edge(first, first + 1, 2);
        return;
    }
    for (std::size_t i = 0; i < size; ++i)
        g.add_edge(first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % size));
}

void append_regular_cycle(Graph& g, Vertex first, std::size_t m, std::size_t degree) {
    for (std::size_t i = 0; i < m; ++i) {
        g.add_edge(first + static_cast<Vertex>(i), first + static_cast<Vertex>((i + 1) % m));
        g.add_edge(first + static_cast<Vertex>(m + i), first + static_cast<Vertex>(m + (i + 1) % m));
        g.add_edge(first + static_cast<Vertex>(i), first + static_cast<Vertex>(m + i),
                   static_cast<std::uint32_t>(degree - 2));
    }
}

GrowthConstants growth_from_inventory(const std::vector<GadgetRecord>& inv, std::size_t n_input) {
    auto total = [&](Problem p) {
        std::size_t s = 0;
        for (const auto& rec : inv) {
            std::size_t param = rec.kind == GadgetKind::RegularCycle ? rec.size / 2 : rec.size;
            s += rec.count * gadget_opt(rec.kind, param, rec.kind == GadgetKind::RegularCycle ? (std::size_t{1} << rec.bucket) : 0, p);
        }
        return static_cast<double>(s);
    };
    // cubic inputs admit OPT >= n/4 for MDS and MIS, OPT >= n/2 for VC
    GrowthConstants c;
    c.mds = 1 + total(Problem::Mds) / (static_cast<double>(n_input) / 4);
    c.mis = 1 + total(Problem::Mis) / (static_cast<double>(n_input) / 4);
    c.mvc = 1 + total(Problem::Mvc) / (static_cast<double>(n_input) / 2);
    return c;
}

void verify_embedding(EmbedResult& res, double beta, double t, double c2, const char* who) {
    PlbParams params;
    params.beta = beta;
    params.t = t;
    params.c2 = c2;
    PlbReport rep = check_plb(res.graph, params);
    if (!rep.pass_l.value_or(false))
        throw std::logic_error(std::string(who) + ": constructed graph misses its lower bound in bucket " +
                               std::to_string(rep.witness_bucket_l) + " (construction bug)");
    res.params.c1_fit = rep.c1_fit;
    res.params.c3_fit = rep.c3_fit;
}

}  // namespace

EmbedResult embed_multigraph(const Graph& cubic, double beta, double t, double c2) {
    require_cubic(cubic, "embed_multigraph");
    if (!(beta > 1)) throw std::invalid_argument("embed_multigraph: beta must be > 1");
    if (!(t >= 0)) throw std::invalid_argument("embed_multigraph: t must be >= 0");
    if (!(c2 > 0)) throw std::invalid_argument("embed_multigraph: c2 must be > 0");
    const double K = 1 / (t + 1) + 1 / (beta - 1);
    const double q = 2 * c2 * K;
    if (!(q < 0.5))
        throw std::invalid_argument("embed_multigraph: bracket condition violated, 2*c2*K = " +
                                    std::to_string(q) + " >= 1/2");
    const std::size_t n = cubic.num_vertices();
    const double c = 1 + q / (1 - q);

    auto N = static_cast<std::size_t>(std::ceil(c * static_cast<double>(n) - 1e-12));
    bool bumped = false;
    if ((N - n) % 2 != 0) {
        ++N;
        bumped = true;
    }

    const int d_target = target_top_bucket(N, beta);
    auto demand = [&](int d) { return ceil_count(c2 * unit_bound(d, N, beta, t)); };

    // mandatory filler, in node pairs; bucket 1 already holds the cubic graph
    std::size_t budget_pairs = (N - n) / 2;
    std::size_t need1 = demand(1) > n ? demand(1) - n : 0;
    std::size_t pairs1 = (need1 + 1) / 2;
    std::vector<std::size_t> pairs(static_cast<std::size_t>(d_target) + 1, 0);
    pairs[1] = pairs1;

    int d_built = 1;
    for (int d = d_target; d >= 2; --d) {
        // a 2^d-regular cycle needs at least 3 node pairs
        std::size_t want = std::max<std::size_t>(3, (demand(d) + 1) / 2);
        std::size_t cost = want;
        for (int d2 = 2; d2 < d; ++d2) cost += std::max<std::size_t>(3, (demand(d2) + 1) / 2);
        if (cost + pairs1 <= budget_pairs) {
            d_built = d;
            for (int d2 = 2; d2 <= d; ++d2) pairs[d2] = std::max<std::size_t>(3, (demand(d2) + 1) / 2);
            break;
        }
    }
    std::size_t used = 0;
    for (auto p : pairs) used += p;
    if (used > budget_pairs)
        throw std::invalid_argument(
            "embed_multigraph: input too small, mandatory bucket filler needs " +
            std::to_string(2 * used) + " nodes but only " + std::to_string(2 * budget_pairs) +
            " are available; use a larger cubic graph or smaller c2");

    // remaining pairs round-robin over built buckets, lowest index first
    std::vector<int> rr;
    for (int d = 1; d <= d_built; ++d)
        if (d == 1 || pairs[d] > 0) rr.push_back(d);
    std::size_t leftover = budget_pairs - used;
    for (std::size_t i = 0; i < leftover; ++i) pairs[rr[i % rr.size()]] += 1;

    // build: cubic graph on 0..n-1, then one gadget per bucket
    Graph g(N);
    for (const auto& [e, m] : cubic.edges()) g.add_edge(e.first, e.second, m);

    EmbedResult res;
    auto next = static_cast<Vertex>(n);
    if (pairs[1] > 0) {
        std::size_t size = 2 * pairs[1];
        append_cycle(g, next, size);
        res.gadget_inventory.push_back({1, GadgetKind::Cycle, 1, size});
        next += static_cast<Vertex>(size);
    }
    for (int d = 2; d <= d_built; ++d) {
        if (pairs[d] == 0) continue;
        append_regular_cycle(g, next, pairs[d], std::size_t{1} << d);
        res.gadget_inventory.push_back({d, GadgetKind::RegularCycle, 1, 2 * pairs[d]});
        next += static_cast<Vertex>(2 * pairs[d]);
    }
    if (next != N) throw std::logic_error("embed_multigraph: node count mismatch (construction bug)");

    res.graph = std::move(g);
    res.input_component_map.resize(n);
    for (Vertex v = 0; v < n; ++v) res.input_component_map[v] = v;
    res.params = {beta, t, c2, c, n, N, bumped, d_built, 0, 0};
    res.growth_C = growth_from_inventory(res.gadget_inventory, n);
    verify_embedding(res, beta, t, c2, "embed_multigraph");
    return res;
}

EmbedResult embed_simple(const Graph& cubic, double beta, double t, double c2) {
    require_cubic(cubic, "embed_simple");
    if (!(beta > 2)) throw std::invalid_argument("embed_simple: beta must be > 2");
    if (!(t >= 0)) throw std::invalid_argument("embed_simple: t must be >= 0");
    if (!(c2 > 0)) throw std::invalid_argument("embed_simple: c2 must be > 0");
    const double Kp = 1 / (t + 1) + 1 / (beta - 1) + (t + 1) / (beta - 2) + 1;
    const double q = 2 * c2 * Kp;
    if (!(q < 1))
        throw std::invalid_argument("embed_simple: bracket condition violated, 2*c2*K' = " +
                                    std::to_string(q) + " >= 1");
    const std::size_t n = cubic.num_vertices();
    const double c = 1 / (1 - q);

    auto N = static_cast<std::size_t>(std::ceil(c * static_cast<double>(n) - 1e-12));
    bool bumped = false;
    if (N - n == 1) {
        ++N;  // a single extra node cannot form a star
        bumped = true;
    }
    std::size_t budget = N - n;

    const int d_target = target_top_bucket(N, beta);
    auto demand = [&](int d) { return ceil_count(c2 * unit_bound(d, N, beta, t)); };
    if (demand(1) > n)
        throw std::invalid_argument("embed_simple: input too small, bucket 1 needs " +
                                    std::to_string(demand(1)) + " nodes but the cubic graph has " +
                                    std::to_string(n));

    // mandatory stars per bucket d >= 2, size 2^d + 1 each
    std::vector<std::size_t> stars(static_cast<std::size_t>(d_target) + 1, 0);
    int d_built = 1;
    for (int d = d_target; d >= 2; --d) {
        std::size_t cost = 0;
        for (int d2 = 2; d2 <= d; ++d2) cost += demand(d2) * ((std::size_t{1} << d2) + 1);
        if (cost <= budget) {
            d_built = d;
            for (int d2 = 2; d2 <= d; ++d2) stars[d2] = demand(d2);
            break;
        }
    }
    std::size_t used = 0;
    for (int d = 2; d <= d_built; ++d) used += stars[d] * ((std::size_t{1} << d) + 1);

    // star layout: (bucket, size); center first, then leaves
    std::vector<std::pair<int, std::size_t>> star_plan;
    for (int d = 2; d <= d_built; ++d)
        for (std::size_t i = 0; i < stars[d]; ++i) star_plan.emplace_back(d, (std::size_t{1} << d) + 1);

    // extra canonical stars while the remainder allows one, balancing the
    // smallest count/bound ratio (ties to the lowest bucket)
    std::size_t R = budget - used;
    std::vector<std::size_t> extra_count(static_cast<std::size_t>(std::max(d_built, 1)) + 1, 0);
    const std::size_t canon_min = d_built >= 2 ? 5 : 3;
    while (R >= canon_min) {
        int pick = -1;
        double best_ratio = 0;
        if (d_built >= 2) {
            for (int d = 2; d <= d_built; ++d) {
                std::size_t size = (std::size_t{1} << d) + 1;
                if (size > R) continue;
                double ratio = static_cast<double>(stars[d] + extra_count[d]) / unit_bound(d, N, beta, t);
                if (pick == -1 || ratio < best_ratio) {
                    best_ratio = ratio;
                    pick = d;
                }
            }
        } else {
            pick = 1;  // size-3 stars, centers land in bucket 1
        }
        if (pick == -1) break;
        std::size_t size = (std::size_t{1} << pick) + 1;
        star_plan.emplace_back(pick, size);
        extra_count[pick] += 1;
        R -= size;
    }
    bool attach_leftover = false;
    if (R == 1) {
        if (star_plan.empty())
            throw std::invalid_argument("embed_simple: leftover node unresolvable (no star to attach to)");
        attach_leftover = true;
        R = 0;
    } else if (R >= 2) {
        // fragment star; its center falls into bucket floor(log2(R-1)) <= d_built
        star_plan.emplace_back(R == 2 ? 0 : bucket_of(R - 1), R);
        R = 0;
    }

    Graph g(N);
    for (const auto& [e, m] : cubic.edges()) g.add_edge(e.first, e.second, m);
    EmbedResult res;
    auto next = static_cast<Vertex>(n);
    std::vector<Vertex> centers;
    std::vector<std::size_t> plan_sizes;
    for (auto [bucket, size] : star_plan) {
        (void)bucket;
        Vertex center = next;
        centers.push_back(center);
        plan_sizes.push_back(size);
        for (std::size_t leaf = 1; leaf < size; ++leaf)
            g.add_edge(center, center + static_cast<Vertex>(leaf));
        next += static_cast<Vertex>(size);
    }
    if (attach_leftover) {
        g.add_edge(centers.front(), next);
        plan_sizes.front() += 1;
        ++next;
    }
    if (next != N) throw std::logic_error("embed_simple: node count mismatch (construction bug)");

    for (std::size_t i = 0; i < centers.size(); ++i) {
        auto center_degree = static_cast<std::uint64_t>(plan_sizes[i] - 1);
        int bucket = center_degree == 0 ? 0 : bucket_of(center_degree);
        res.gadget_inventory.push_back({bucket, GadgetKind::Star, 1, plan_sizes[i]});
    }

    res.graph = std::move(g);
    res.input_component_map.resize(n);
    for (Vertex v = 0; v < n; ++v) res.input_component_map[v] = v;
    res.params = {beta, t, c2, c, n, N, bumped, d_built, 0, 0};
    res.growth_C = growth_from_inventory(res.gadget_inventory, n);
    verify_embedding(res, beta, t, c2, "embed_simple");
    return res;
}

std::size_t reduction_opt(const EmbedResult& e, Problem problem, std::size_t opt_of_input) {
    std::size_t total = opt_of_input;
    for (const auto& rec : e.gadget_inventory) {
        std::size_t param = rec.kind == GadgetKind::RegularCycle ? rec.size / 2 : rec.size;
        std::size_t d = rec.kind == GadgetKind::RegularCycle ? (std::size_t{1} << rec.bucket) : 0;
        total += rec.count * gadget_opt(rec.kind, param, d, problem);
    }
    return total;
}

}  // namespace plb
