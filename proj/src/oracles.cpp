#include "plb/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace plb {

namespace {

using Mask = std::uint64_t;

void require_budget(const Graph& g, std::size_t budget, const char* who) {
    if (g.num_vertices() > budget)
        throw std::invalid_argument(std::string(who) + ": n=" + std::to_string(g.num_vertices()) +
                                    " exceeds budget " + std::to_string(budget));
    if (g.num_vertices() > 64)
        throw std::invalid_argument(std::string(who) + ": instances beyond 64 vertices are unsupported");
}

// open and closed neighborhood masks
struct MaskGraph {
    std::size_t n;
    std::vector<Mask> open, closed;
    Mask all;

    explicit MaskGraph(const Graph& g) : n(g.num_vertices()), open(n, 0), closed(n, 0) {
        for (const auto& [e, m] : g.edges()) {
            (void)m;
            open[e.first] |= Mask(1) << e.second;
            open[e.second] |= Mask(1) << e.first;
        }
        for (std::size_t v = 0; v < n; ++v) closed[v] = open[v] | (Mask(1) << v);
        all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    }
};

std::vector<Vertex> mask_to_set(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

struct MdsSolver {
    const MaskGraph& mg;
    std::size_t best_size;
    Mask best_set = 0;

    explicit MdsSolver(const MaskGraph& g) : mg(g), best_size(g.n + 1) {}

    // greedy cover gives the initial upper bound
    void seed_greedy() {
        Mask uncovered = mg.all;
        Mask chosen = 0;
        std::size_t count = 0;
        while (uncovered) {
            std::size_t best_v = 0, best_cov = 0;
            for (std::size_t v = 0; v < mg.n; ++v) {
                auto cov = static_cast<std::size_t>(std::popcount(mg.closed[v] & uncovered));
                if (cov > best_cov) {
                    best_cov = cov;
                    best_v = v;
                }
            }
            chosen |= Mask(1) << best_v;
            uncovered &= ~mg.closed[best_v];
            ++count;
        }
        best_size = count;
        best_set = chosen;
    }

    void rec(Mask uncovered, Mask chosen, std::size_t size) {
        if (!uncovered) {
            if (size < best_size) {
                best_size = size;
                best_set = chosen;
            }
            return;
        }
        std::size_t max_cov = 0;
        for (std::size_t v = 0; v < mg.n; ++v)
            max_cov = std::max(max_cov, static_cast<std::size_t>(std::popcount(mg.closed[v] & uncovered)));
        std::size_t lb = (static_cast<std::size_t>(std::popcount(uncovered)) + max_cov - 1) / max_cov;
        if (size + lb >= best_size) return;

        // branch on the uncovered vertex with the fewest dominators
        std::size_t pick = 64, pick_cands = mg.n + 1;
        Mask u = uncovered;
        while (u) {
            auto v = static_cast<std::size_t>(std::countr_zero(u));
            u &= u - 1;
            auto cands = static_cast<std::size_t>(std::popcount(mg.closed[v]));
            if (cands < pick_cands) {
                pick_cands = cands;
                pick = v;
            }
        }
        // try dominators, highest fresh coverage first
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (-coverage, v)
        Mask cand = mg.closed[pick];
        while (cand) {
            auto w = static_cast<std::size_t>(std::countr_zero(cand));
            cand &= cand - 1;
            order.emplace_back(mg.n - static_cast<std::size_t>(std::popcount(mg.closed[w] & uncovered)), w);
        }
        std::sort(order.begin(), order.end());
        for (auto [key, w] : order) {
            (void)key;
            rec(uncovered & ~mg.closed[w], chosen | (Mask(1) << w), size + 1);
        }
    }
};

struct MisSolver {
    const MaskGraph& mg;
    std::size_t best_size = 0;
    Mask best_set = 0;

    explicit MisSolver(const MaskGraph& g) : mg(g) {}

    // greedy clique cover of the residual vertices; its size bounds the
    // independence number from above
    std::size_t clique_cover_bound(Mask alive) const {
        std::vector<Mask> cliques;
        Mask a = alive;
        while (a) {
            auto v = static_cast<std::size_t>(std::countr_zero(a));
            a &= a - 1;
            bool placed = false;
            for (Mask& c : cliques) {
                if ((c & ~mg.open[v]) == 0) {  // v adjacent to every member
                    c |= Mask(1) << v;
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques.push_back(Mask(1) << v);
        }
        return cliques.size();
    }

    void rec(Mask alive, Mask chosen, std::size_t size) {
        while (true) {
            if (size + static_cast<std::size_t>(std::popcount(alive)) <= best_size) return;
            if (!alive) break;
            // take degree <= 1 vertices outright
            bool reduced = false;
            Mask a = alive;
            while (a) {
                auto v = static_cast<std::size_t>(std::countr_zero(a));
                a &= a - 1;
                Mask nb = mg.open[v] & alive;
                if (std::popcount(nb) <= 1) {
                    chosen |= Mask(1) << v;
                    ++size;
                    alive &= ~(mg.closed[v] | nb);
                    reduced = true;
                    break;
                }
            }
            if (reduced) continue;
            if (size + clique_cover_bound(alive) <= best_size) return;
            // branch on a maximum-degree vertex
            std::size_t pick = 0, pick_deg = 0;
            a = alive;
            while (a) {
                auto v = static_cast<std::size_t>(std::countr_zero(a));
                a &= a - 1;
                auto d = static_cast<std::size_t>(std::popcount(mg.open[v] & alive));
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            rec(alive & ~mg.closed[pick], chosen | (Mask(1) << pick), size + 1);  // take
            rec(alive & ~(Mask(1) << pick), chosen, size);                        // skip
            return;
        }
        if (size > best_size) {
            best_size = size;
            best_set = chosen;
        }
    }
};

}  // namespace

OracleResult exact_mds(const Graph& g, std::size_t budget) {
    require_budget(g, budget, "exact_mds");
    if (g.num_vertices() == 0) return {0, {}};
    MaskGraph mg(g);
    MdsSolver solver(mg);
    solver.seed_greedy();
    solver.rec(mg.all, 0, 0);
    return {solver.best_size, mask_to_set(solver.best_set)};
}

OracleResult exact_mis(const Graph& g, std::size_t budget) {
    require_budget(g, budget, "exact_mis");
    if (g.num_vertices() == 0) return {0, {}};
    MaskGraph mg(g);
    MisSolver solver(mg);
    solver.rec(mg.all, 0, 0);
    return {solver.best_size, mask_to_set(solver.best_set)};
}

OracleResult exact_mvc(const Graph& g, std::size_t budget) {
    require_budget(g, budget, "exact_mvc");
    auto mis = exact_mis(g, budget);
    Mask in_mis = 0;
    for (Vertex v : mis.witness) in_mis |= Mask(1) << v;
    MaskGraph mg(g);
    return {g.num_vertices() - mis.size, mask_to_set(mg.all & ~in_mis)};
}

OracleResult exact_cds(const Graph& g, std::size_t budget) {
    require_budget(g, budget, "exact_cds");
    if (!g.is_connected()) throw std::invalid_argument("exact_cds: input graph is not connected");
    const std::size_t n = g.num_vertices();
    if (n >= 63) throw std::invalid_argument("exact_cds: instance too large for subset enumeration");
    if (n == 0) return {0, {}};
    if (n == 1) return {1, {0}};
    MaskGraph mg(g);

    auto dominates = [&](Mask s) {
        Mask covered = 0;
        Mask m = s;
        while (m) {
            auto v = static_cast<std::size_t>(std::countr_zero(m));
            m &= m - 1;
            covered |= mg.closed[v];
        }
        return covered == mg.all;
    };
    auto connected_within = [&](Mask s) {
        auto start = static_cast<std::size_t>(std::countr_zero(s));
        Mask frontier = Mask(1) << start, seen = frontier;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                auto v = static_cast<std::size_t>(std::countr_zero(f));
                f &= f - 1;
                next |= mg.open[v] & s;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == s;
    };

    for (std::size_t k = 1; k <= n; ++k) {
        // Gosper's hack over all k-subsets
        Mask s = (Mask(1) << k) - 1;
        Mask limit = k == n ? mg.all : Mask(1) << n;
        while (s < limit || (k == n && s == mg.all)) {
            if (dominates(s) && connected_within(s)) return {k, mask_to_set(s)};
            if (s == mg.all) break;
            Mask c = s & -s;
            Mask r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    throw std::logic_error("exact_cds: no dominating set found");  // unreachable on connected input
}

}  // namespace plb
