#include "plb/solvers.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace plb {

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::Mds: return "mds";
        case Problem::Cds: return "cds";
        case Problem::Mis: return "mis";
        case Problem::Mvc: return "mvc";
    }
    return "?";
}

Problem problem_from_name(const std::string& name) {
    if (name == "mds") return Problem::Mds;
    if (name == "cds") return Problem::Cds;
    if (name == "mis") return Problem::Mis;
    if (name == "mvc") return Problem::Mvc;
    throw std::invalid_argument("unknown problem: " + name);
}

namespace {

using Adjacency = std::vector<std::vector<std::pair<Vertex, std::uint32_t>>>;

void require_no_isolated(const Graph& g, const char* who) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument(std::string(who) + ": isolated vertex " + std::to_string(v));
}

// max-heap entry ordering: larger key first, then smaller id
struct MaxKeyMinId {
    bool operator()(const std::pair<std::uint64_t, Vertex>& a,
                    const std::pair<std::uint64_t, Vertex>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    }
};

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

SolveResult greedy_mds(const Graph& g, bool want_trace) {
    require_no_isolated(g, "greedy_mds");
    const std::size_t n = g.num_vertices();
    Adjacency adj = g.adjacency();

    std::vector<char> dominated(n, 0), chosen(n, 0);
    std::size_t dominated_count = 0;

    auto gain_of = [&](Vertex v) {
        std::uint64_t gain = dominated[v] ? 0 : 1;
        for (auto [u, m] : adj[v]) {
            (void)m;
            if (!dominated[u]) ++gain;
        }
        return gain;
    };

    // lazy priority queue; gains only decrease, so a popped entry whose gain
    // is stale gets re-pushed with its current value
    std::priority_queue<std::pair<std::uint64_t, Vertex>, std::vector<std::pair<std::uint64_t, Vertex>>, MaxKeyMinId> pq;
    for (Vertex v = 0; v < n; ++v) pq.push({gain_of(v), v});

    SolveResult res{Problem::Mds, "greedy", {}, false, std::nullopt};
    if (want_trace) res.trace.emplace();
    while (dominated_count < n) {
        auto [gain, v] = pq.top();
        pq.pop();
        if (chosen[v]) continue;
        std::uint64_t cur = gain_of(v);
        if (cur != gain) {
            pq.push({cur, v});
            continue;
        }
        chosen[v] = 1;
        res.solution.push_back(v);
        if (want_trace) res.trace->push_back({v, gain});
        if (!dominated[v]) {
            dominated[v] = 1;
            ++dominated_count;
        }
        for (auto [u, m] : adj[v]) {
            (void)m;
            if (!dominated[u]) {
                dominated[u] = 1;
                ++dominated_count;
            }
        }
    }
    res.solution = sorted(std::move(res.solution));
    res.valid = validate_solution(g, Problem::Mds, res.solution).ok;
    return res;
}

namespace {

// f(C) = number of connected components induced by C plus number of
// vertices not dominated by C
std::uint64_t cds_potential(const Adjacency& adj, const std::vector<char>& in_set, std::size_t n) {
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::uint64_t components = 0, members = 0;
    for (Vertex v = 0; v < n; ++v)
        if (in_set[v]) ++members;
    std::uint64_t merges = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!in_set[v]) continue;
        for (auto [u, m] : adj[v]) {
            (void)m;
            if (u < v || !in_set[u]) continue;
            Vertex a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
    }
    components = members - merges;
    std::uint64_t undominated = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (in_set[v]) continue;
        bool dom = false;
        for (auto [u, m] : adj[v]) {
            (void)m;
            if (in_set[u]) {
                dom = true;
                break;
            }
        }
        if (!dom) ++undominated;
    }
    return components + undominated;
}

}  // namespace

SolveResult greedy_cds(const Graph& g, bool want_trace) {
    require_no_isolated(g, "greedy_cds");
    if (!g.is_connected()) throw std::invalid_argument("greedy_cds: input graph is not connected");
    const std::size_t n = g.num_vertices();
    Adjacency adj = g.adjacency();

    std::vector<char> in_set(n, 0);
    SolveResult res{Problem::Cds, "greedy-potential", {}, false, std::nullopt};
    if (want_trace) res.trace.emplace();

    std::uint64_t f = cds_potential(adj, in_set, n);
    while (f != 1) {
        Vertex best = 0;
        std::uint64_t best_f = std::numeric_limits<std::uint64_t>::max();
        for (Vertex v = 0; v < n; ++v) {
            if (in_set[v]) continue;
            in_set[v] = 1;
            std::uint64_t fv = cds_potential(adj, in_set, n);
            in_set[v] = 0;
            if (fv < best_f) {
                best_f = fv;
                best = v;
            }
        }
        // a non-improving step is allowed; the set grows, so this terminates,
        // and f(V) = 1 on a connected graph
        in_set[best] = 1;
        res.solution.push_back(best);
        if (want_trace) res.trace->push_back({best, best_f});
        f = best_f;
    }
    res.solution = sorted(std::move(res.solution));
    res.valid = validate_solution(g, Problem::Cds, res.solution).ok;
    return res;
}

SolveResult greedy_mis(const Graph& g, bool want_trace) {
    const std::size_t n = g.num_vertices();
    Adjacency adj = g.adjacency();
    std::vector<char> alive(n, 1);
    std::vector<std::uint64_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

    // min-heap on (degree, id); degrees only decrease, so stale entries are
    // larger than the live one already in the heap and can be skipped
    using Entry = std::pair<std::uint64_t, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (Vertex v = 0; v < n; ++v) pq.push({deg[v], v});

    SolveResult res{Problem::Mis, "greedy-mindeg", {}, false, std::nullopt};
    if (want_trace) res.trace.emplace();
    std::size_t alive_count = n;
    while (alive_count > 0) {
        auto [d, v] = pq.top();
        pq.pop();
        if (!alive[v] || d != deg[v]) continue;
        res.solution.push_back(v);
        if (want_trace) res.trace->push_back({v, d});
        std::vector<Vertex> removed{v};
        alive[v] = 0;
        --alive_count;
        for (auto [u, m] : adj[v]) {
            (void)m;
            if (alive[u]) {
                alive[u] = 0;
                --alive_count;
                removed.push_back(u);
            }
        }
        for (Vertex r : removed) {
            for (auto [w, m] : adj[r]) {
                if (alive[w]) {
                    deg[w] -= m;
                    pq.push({deg[w], w});
                }
            }
        }
    }
    res.solution = sorted(std::move(res.solution));
    res.valid = validate_solution(g, Problem::Mis, res.solution).ok;
    return res;
}

SolveResult greedy_vc_degree(const Graph& g, bool want_trace) {
    const std::size_t n = g.num_vertices();
    Adjacency adj = g.adjacency();
    std::vector<char> removed(n, 0);
    std::vector<std::uint64_t> deg(n);
    std::uint64_t edges_left = 0;
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    edges_left = g.num_edges();

    std::priority_queue<std::pair<std::uint64_t, Vertex>, std::vector<std::pair<std::uint64_t, Vertex>>, MaxKeyMinId> pq;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] > 0) pq.push({deg[v], v});

    SolveResult res{Problem::Mvc, "greedy-maxdeg", {}, false, std::nullopt};
    if (want_trace) res.trace.emplace();
    while (edges_left > 0) {
        auto [d, v] = pq.top();
        pq.pop();
        if (removed[v] || d != deg[v] || deg[v] == 0) continue;
        res.solution.push_back(v);
        if (want_trace) res.trace->push_back({v, d});
        removed[v] = 1;
        for (auto [u, m] : adj[v]) {
            if (!removed[u] && deg[u] > 0) {
                deg[u] -= m;
                edges_left -= m;
                if (deg[u] > 0) pq.push({deg[u], u});
            }
        }
        deg[v] = 0;
    }
    res.solution = sorted(std::move(res.solution));
    res.valid = validate_solution(g, Problem::Mvc, res.solution).ok;
    return res;
}

SolveResult matching_vc(const Graph& g) {
    std::vector<char> covered(g.num_vertices(), 0);
    SolveResult res{Problem::Mvc, "matching", {}, false, std::nullopt};
    for (const auto& [e, m] : g.edges()) {
        (void)m;
        if (!covered[e.first] && !covered[e.second]) {
            covered[e.first] = covered[e.second] = 1;
            res.solution.push_back(e.first);
            res.solution.push_back(e.second);
        }
    }
    res.solution = sorted(std::move(res.solution));
    res.valid = validate_solution(g, Problem::Mvc, res.solution).ok;
    return res;
}

ValidationResult validate_solution(const Graph& g, Problem problem, const std::vector<Vertex>& s) {
    const std::size_t n = g.num_vertices();
    std::vector<char> in_set(n, 0);
    for (Vertex v : s) {
        if (v >= n) return {false, "vertex " + std::to_string(v) + " out of range"};
        in_set[v] = 1;
    }
    Adjacency adj = g.adjacency();

    auto dominated_check = [&]() -> ValidationResult {
        for (Vertex v = 0; v < n; ++v) {
            if (in_set[v]) continue;
            bool dom = false;
            for (auto [u, m] : adj[v]) {
                (void)m;
                if (in_set[u]) {
                    dom = true;
                    break;
                }
            }
            if (!dom) return {false, "vertex " + std::to_string(v) + " not dominated"};
        }
        return {true, ""};
    };

    switch (problem) {
        case Problem::Mds:
            return dominated_check();
        case Problem::Cds: {
            auto dom = dominated_check();
            if (!dom.ok) return dom;
            if (s.empty()) return {n == 0, n == 0 ? "" : "empty set on non-empty graph"};
            // connectivity of the induced subgraph
            std::vector<char> seen(n, 0);
            std::vector<Vertex> stack{s.front()};
            seen[s.front()] = 1;
            std::size_t reached = 1;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (auto [u, m] : adj[v]) {
                    (void)m;
                    if (in_set[u] && !seen[u]) {
                        seen[u] = 1;
                        ++reached;
                        stack.push_back(u);
                    }
                }
            }
            std::size_t members = 0;
            for (Vertex v = 0; v < n; ++v) members += in_set[v];
            if (reached != members) return {false, "induced solution subgraph is disconnected"};
            return {true, ""};
        }
        case Problem::Mis: {
            for (const auto& [e, m] : g.edges()) {
                (void)m;
                if (in_set[e.first] && in_set[e.second])
                    return {false, "adjacent pair (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") inside set"};
            }
            // maximality: nothing outside can be added
            for (Vertex v = 0; v < n; ++v) {
                if (in_set[v]) continue;
                bool blocked = false;
                for (auto [u, m] : adj[v]) {
                    (void)m;
                    if (in_set[u]) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) return {false, "not maximal: vertex " + std::to_string(v) + " is addable"};
            }
            return {true, ""};
        }
        case Problem::Mvc: {
            for (const auto& [e, m] : g.edges()) {
                (void)m;
                if (!in_set[e.first] && !in_set[e.second])
                    return {false, "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") uncovered"};
            }
            return {true, ""};
        }
    }
    return {false, "unknown problem"};
}

}  // namespace plb
