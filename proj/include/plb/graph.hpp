#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace plb {

using Vertex = std::uint32_t;

// Unordered pair, normalized so first < second.
using EdgeKey = std::pair<Vertex, Vertex>;

// Loop-free undirected multigraph over dense vertex ids 0..n-1.
// Parallel edges are stored as one entry with a multiplicity.
// Degrees count multiplicity. Mutable only through add_edge; every
// consumer treats a fully built Graph as immutable.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), degree_(n, 0) {}

    std::size_t num_vertices() const { return n_; }
    // number of distinct vertex pairs carrying at least one edge
    std::size_t num_edge_pairs() const { return edges_.size(); }
    std::uint64_t num_edges() const { return edge_count_; }

    void add_edge(Vertex u, Vertex v, std::uint32_t mult = 1);

    std::uint32_t multiplicity(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
    std::uint64_t degree(Vertex v) const;
    std::uint64_t max_degree() const;
    // minimum degree over vertices of degree >= 1; 0 if the graph has no edges
    std::uint64_t min_degree_nonisolated() const;
    bool is_simple() const { return simple_; }
    bool has_isolated_vertex() const;
    bool is_connected() const;

    // sorted by (u, v); the canonical edge order everywhere
    const std::map<EdgeKey, std::uint32_t>& edges() const { return edges_; }

    // adjacency lists as (neighbor, multiplicity), neighbors ascending
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adjacency() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_ = 0;
    std::map<EdgeKey, std::uint32_t> edges_;
    std::vector<std::uint64_t> degree_;
    std::uint64_t edge_count_ = 0;
    bool simple_ = true;
};

// counts[d] = number of vertices with degree in [2^d, 2^{d+1}).
// Degree-0 vertices fit no bucket and are tracked separately.
struct DegreeBuckets {
    std::vector<std::uint64_t> counts;
    std::uint64_t isolated = 0;
};

// bucket index of a positive degree: floor(log2 deg)
int bucket_of(std::uint64_t deg);

DegreeBuckets degree_buckets(const Graph& g);

// sum of degrees over a vertex set (duplicates in s are counted once)
std::uint64_t volume(const Graph& g, const std::vector<Vertex>& s);

// Edge-list format: header "n <int> m <int>", then m lines "u v" or
// "u v mult", '#' comments, LF endings. load(save(g)) == g bit-exactly.
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);
Graph read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace plb
