#include "plb/graph.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plb {

void Graph::add_edge(Vertex u, Vertex v, std::uint32_t mult) {
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") not allowed");
    if (u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(std::max(u, v)) + " >= n=" + std::to_string(n_));
    if (mult == 0) throw std::invalid_argument("edge multiplicity must be positive");
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edges_.try_emplace({u, v}, mult);
    if (!inserted) it->second += mult;
    if (it->second > 1) simple_ = false;
    degree_[u] += mult;
    degree_[v] += mult;
    edge_count_ += mult;
}

std::uint32_t Graph::multiplicity(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

std::uint64_t Graph::degree(Vertex v) const {
    if (v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    return degree_[v];
}

std::uint64_t Graph::max_degree() const {
    std::uint64_t d = 0;
    for (auto x : degree_) d = std::max(d, x);
    return d;
}

std::uint64_t Graph::min_degree_nonisolated() const {
    std::uint64_t d = 0;
    for (auto x : degree_)
        if (x > 0 && (d == 0 || x < d)) d = x;
    return d;
}

bool Graph::has_isolated_vertex() const {
    for (auto x : degree_)
        if (x == 0) return true;
    return false;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto adj = adjacency();
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto [w, m] : adj[v]) {
            (void)m;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj(n_);
    for (const auto& [e, m] : edges_) {
        adj[e.first].emplace_back(e.second, m);
        adj[e.second].emplace_back(e.first, m);
    }
    return adj;
}

int bucket_of(std::uint64_t deg) {
    if (deg == 0) throw std::invalid_argument("degree 0 has no bucket");
    return 63 - std::countl_zero(deg);
}

DegreeBuckets degree_buckets(const Graph& g) {
    DegreeBuckets b;
    std::uint64_t dmax = g.max_degree();
    b.counts.assign(dmax == 0 ? 0 : bucket_of(dmax) + 1, 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::uint64_t d = g.degree(v);
        if (d == 0)
            ++b.isolated;
        else
            ++b.counts[bucket_of(d)];
    }
    return b;
}

std::uint64_t volume(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::uint64_t vol = 0;
    for (Vertex v : s) {
        if (v >= g.num_vertices()) throw std::invalid_argument("volume: vertex id out of range: " + std::to_string(v));
        if (!seen[v]) {
            seen[v] = 1;
            vol += g.degree(v);
        }
    }
    return vol;
}

namespace {

[[noreturn]] void parse_fail(const std::string& src, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(src + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& src) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        std::string kn, km;
        long long nv = -1, mv = -1;
        if (!(hs >> kn >> nv >> km >> mv) || kn != "n" || km != "m" || nv < 0 || mv < 0)
            parse_fail(src, line_no, "expected header 'n <int> m <int>', got '" + line + "'");
        std::string rest;
        if (hs >> rest) parse_fail(src, line_no, "trailing tokens after header");
        n = static_cast<std::size_t>(nv);
        m = static_cast<std::size_t>(mv);
        have_header = true;
        break;
    }
    if (!have_header) parse_fail(src, line_no, "missing header line");

    Graph g(n);
    std::size_t edges_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream es(line);
        long long u = -1, v = -1, mult = 1;
        if (!(es >> u >> v)) parse_fail(src, line_no, "malformed edge line '" + line + "'");
        if (!(es >> mult)) mult = 1;
        std::string rest;
        if (es >> rest) parse_fail(src, line_no, "trailing tokens on edge line");
        if (u < 0 || v < 0) parse_fail(src, line_no, "negative vertex id");
        if (u == v) parse_fail(src, line_no, "loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            parse_fail(src, line_no, "vertex id >= n");
        if (mult < 1) parse_fail(src, line_no, "multiplicity must be >= 1");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<std::uint32_t>(mult));
        ++edges_read;
    }
    if (edges_read != m)
        throw std::runtime_error(src + ": header announced m=" + std::to_string(m) + " edges but file has " + std::to_string(edges_read));
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.num_vertices() << " m " << g.num_edge_pairs() << "\n";
    for (const auto& [e, mult] : g.edges()) {
        out << e.first << " " << e.second;
        if (mult != 1) out << " " << mult;
        out << "\n";
    }
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in, path);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_edge_list(g, out);
    out.flush();
    if (!out) throw std::runtime_error("I/O failure writing " + path);
}

}  // namespace plb
