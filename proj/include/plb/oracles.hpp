#pragma once

#include <vector>

#include "plb/graph.hpp"

namespace plb {

struct OracleResult {
    std::size_t size = 0;
    std::vector<Vertex> witness;  // ascending, validates against the problem
};

// Exact optima on small instances. Budgets are hard errors so bulk callers
// cannot slip into exponential work; state is a 64-bit vertex mask.

// branch and bound over closed neighborhoods (set cover view)
OracleResult exact_mds(const Graph& g, std::size_t budget = 30);

// branch and bound on a maximum-degree vertex with greedy clique-cover pruning
OracleResult exact_mis(const Graph& g, std::size_t budget = 40);

// complement of exact_mis on the simple skeleton (parallel edges collapse)
OracleResult exact_mvc(const Graph& g, std::size_t budget = 40);

// subset enumeration in increasing size with domination + connectivity check
OracleResult exact_cds(const Graph& g, std::size_t budget = 20);

}  // namespace plb
