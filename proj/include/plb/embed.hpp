#pragma once

#include <string>
#include <vector>

#include "plb/graph.hpp"
#include "plb/solvers.hpp"

namespace plb {

enum class GadgetKind { Cycle, RegularCycle, Star };

std::string gadget_kind_name(GadgetKind k);

struct GadgetRecord {
    int bucket = 0;          // degree bucket holding the gadget's high-degree nodes
    GadgetKind kind{};
    std::size_t count = 1;
    std::size_t size = 0;    // total vertices of one gadget
};

struct EmbedParamsUsed {
    double beta = 0, t = 0, c2 = 0;
    double c_growth = 0;       // node growth constant of the construction
    std::size_t n_input = 0;
    std::size_t n_total = 0;   // N = |V(G_PLB)|
    bool parity_bumped = false;
    int d_built = 0;           // topmost bucket that received a filler gadget
    double c1_fit = 0, c3_fit = 0;
};

// per-problem optimum growth constants, computed from the actual gadget
// inventory (not the asymptotic closed forms, which ignore ceilings)
struct GrowthConstants {
    double mds = 0, mis = 0, mvc = 0;
    double of(Problem p) const;
};

struct EmbedResult {
    Graph graph;
    std::vector<Vertex> input_component_map;  // ids of the embedded input, 0..n-1
    std::vector<GadgetRecord> gadget_inventory;
    EmbedParamsUsed params;
    GrowthConstants growth_C;
};

// Two n-cycles whose i-th vertices are joined by d-2 parallel edges;
// every vertex has degree d. Requires n >= 3, d >= 3.
Graph regular_cycle(std::size_t n, std::size_t d);

// Closed-form optimum of a gadget. For Cycle, n is the cycle length (n >= 2,
// where n = 2 is the 2-vertex multigraph cycle); for RegularCycle, n is the
// per-cycle length of a 2n-vertex gadget; for Star, n is the total size >= 2.
// Supported problems: MDS, MIS, MVC.
std::size_t gadget_opt(GadgetKind kind, std::size_t n, std::size_t d, Problem problem);

// Embed a cubic graph into a loop-free multigraph satisfying the three
// degree-bound properties for (beta, t) with lower-bound constant c2.
// Filler gadgets are cycles (bucket 1) and 2^d-regular cycles (buckets >= 2).
EmbedResult embed_multigraph(const Graph& cubic, double beta, double t, double c2);

// Same for simple graphs; fillers are stars with centers in buckets >= 2
// (small remainder stars may land in buckets 0/1) and leaves in bucket 0.
EmbedResult embed_simple(const Graph& cubic, double beta, double t, double c2);

// Optimum of the embedded graph: gadgets are disjoint components, so optima
// add across the inventory.
std::size_t reduction_opt(const EmbedResult& e, Problem problem, std::size_t opt_of_input);

}  // namespace plb
