#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plb/graph.hpp"

namespace plb {

enum class Problem { Mds, Cds, Mis, Mvc };

std::string problem_name(Problem p);
Problem problem_from_name(const std::string& name);

struct TraceStep {
    Vertex chosen;
    std::uint64_t gain;  // meaning depends on the algorithm
};

struct SolveResult {
    Problem problem;
    std::string algorithm;
    std::vector<Vertex> solution;  // ascending
    bool valid = false;
    std::optional<std::vector<TraceStep>> trace;
};

// All greedy rules break ties by smallest vertex id, so a given input has
// exactly one output.

// Repeatedly add the vertex covering the most not-yet-dominated vertices
// (counting itself). Rejects graphs with isolated vertices.
SolveResult greedy_mds(const Graph& g, bool want_trace = false);

// Potential greedy for connected dominating set: add the vertex minimizing
// f(C u {v}) = #components(C u {v}) + #undominated(C u {v}), stop at f = 1.
// Requires a connected input without isolated vertices.
SolveResult greedy_cds(const Graph& g, bool want_trace = false);

// Repeatedly take a minimum-degree vertex of the residual graph and delete
// its closed neighborhood.
SolveResult greedy_mis(const Graph& g, bool want_trace = false);

// Repeatedly take a maximum-degree vertex of the residual graph and delete
// its incident edges, until no edge remains.
SolveResult greedy_vc_degree(const Graph& g, bool want_trace = false);

// Maximal matching in lexicographic edge order; both endpoints join the cover.
SolveResult matching_vc(const Graph& g);

struct ValidationResult {
    bool ok = false;
    std::string witness;  // human-readable violation, empty when ok
};

ValidationResult validate_solution(const Graph& g, Problem problem, const std::vector<Vertex>& s);

}  // namespace plb
