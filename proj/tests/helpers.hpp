#pragma once

#include <cstdint>
#include <vector>

#include "plb/graph.hpp"

namespace testutil {

inline plb::Graph path(std::size_t n) {
    plb::Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(static_cast<plb::Vertex>(i), static_cast<plb::Vertex>(i + 1));
    return g;
}

inline plb::Graph cycle(std::size_t n) {
    plb::Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(static_cast<plb::Vertex>(i), static_cast<plb::Vertex>((i + 1) % n));
    return g;
}

inline plb::Graph star(std::size_t leaves) {
    plb::Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, static_cast<plb::Vertex>(i));
    return g;
}

inline plb::Graph complete(std::size_t n) {
    plb::Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(static_cast<plb::Vertex>(i), static_cast<plb::Vertex>(j));
    return g;
}

inline plb::Graph petersen() {
    plb::Graph g(10);
    // outer 5-cycle, inner pentagram, spokes
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// full 2^n enumeration oracles, independent of the branch-and-bound path

inline bool dominates_mask(const std::vector<std::uint64_t>& closed, std::uint64_t s, std::uint64_t all) {
    std::uint64_t covered = 0;
    for (std::size_t v = 0; v < closed.size(); ++v)
        if (s >> v & 1) covered |= closed[v];
    return covered == all;
}

inline std::vector<std::uint64_t> closed_masks(const plb::Graph& g) {
    std::vector<std::uint64_t> closed(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) closed[v] = std::uint64_t{1} << v;
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        closed[e.first] |= std::uint64_t{1} << e.second;
        closed[e.second] |= std::uint64_t{1} << e.first;
    }
    return closed;
}

inline std::size_t brute_mds(const plb::Graph& g) {
    const std::size_t n = g.num_vertices();
    auto closed = closed_masks(g);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::size_t best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (dominates_mask(closed, s, all))
            best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    return best;
}

inline std::size_t brute_mis(const plb::Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> open(n, 0);
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        open[e.first] |= std::uint64_t{1} << e.second;
        open[e.second] |= std::uint64_t{1} << e.first;
    }
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool independent = true;
        for (std::size_t v = 0; independent && v < n; ++v)
            if ((s >> v & 1) && (open[v] & s)) independent = false;
        if (independent)
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

inline std::size_t brute_mvc(const plb::Graph& g) {
    const std::size_t n = g.num_vertices();
    std::size_t best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool covers = true;
        for (const auto& [e, m] : g.edges()) {
            (void)m;
            if (!((s >> e.first & 1) || (s >> e.second & 1))) {
                covers = false;
                break;
            }
        }
        if (covers) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

inline std::size_t brute_cds(const plb::Graph& g) {
    const std::size_t n = g.num_vertices();
    auto closed = closed_masks(g);
    auto adj = g.adjacency();
    std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::size_t best = n + 1;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        if (static_cast<std::size_t>(__builtin_popcountll(s)) >= best) continue;
        if (!dominates_mask(closed, s, all)) continue;
        // connectivity of induced subgraph
        std::uint64_t start = s & (~s + 1);
        std::uint64_t seen = start, frontier = start;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (frontier >> v & 1)
                    for (auto [u, m] : adj[v]) {
                        (void)m;
                        if (s >> u & 1) next |= std::uint64_t{1} << u;
                    }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) best = static_cast<std::size_t>(__builtin_popcountll(s));
    }
    return best;
}

// deterministic scrambled-LCG random multigraph for property tests
inline plb::Graph random_multigraph(std::size_t n, std::size_t edges, std::uint64_t seed, bool allow_parallel = true) {
    plb::Graph g(n);
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    std::size_t added = 0, guard = 0;
    while (added < edges && ++guard < 100 * edges + 100) {
        auto u = static_cast<plb::Vertex>(next() % n);
        auto v = static_cast<plb::Vertex>(next() % n);
        if (u == v) continue;
        if (!allow_parallel && g.adjacent(u, v)) continue;
        g.add_edge(u, v, allow_parallel ? 1 + next() % 3 : 1);
        ++added;
    }
    return g;
}

}  // namespace testutil
