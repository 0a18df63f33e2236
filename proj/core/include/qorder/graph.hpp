#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qorder {

// Vertices are dense integers 0..n-1.  Edges are stored as sorted unordered
// pairs (u < v).  Adjacency doubles as one 64-bit mask per vertex, so the
// supported order is n <= 62 (which also matches the short graph6 form).
inline constexpr int kMaxVertices = 62;

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return degrees_[v]; }
    int max_degree() const;
    std::uint64_t neighbors_mask(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph&) const = default;

private:
    friend Graph make_graph(int n, const std::vector<Edge>& edge_list);
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> degrees_;
};

// Girth as a proper sum type: Acyclic compares greater than every finite
// value, so "shortest cycle" ordering never meets a sentinel integer.
class GirthValue {
public:
    static GirthValue finite(int g) { return GirthValue(g); }
    static GirthValue acyclic() { return GirthValue(-1); }

    bool is_acyclic() const { return g_ < 0; }
    bool is_finite() const { return g_ >= 0; }
    int value() const;  // throws on Acyclic

    friend bool operator==(GirthValue a, GirthValue b) { return a.key() == b.key(); }
    friend auto operator<=>(GirthValue a, GirthValue b) { return a.key() <=> b.key(); }

private:
    explicit GirthValue(int g) : g_(g) {}
    long key() const { return is_acyclic() ? 0x7fffffffL : g_; }
    int g_;
};

// Throws std::invalid_argument on self-loops or endpoints >= n.
// Duplicate edges in the input are collapsed.
Graph make_graph(int n, const std::vector<Edge>& edge_list);

GirthValue girth(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

// Convenience builders used throughout tests and family constructors.
Graph cycle_graph(int g);
Graph path_graph(int n);
Graph star_graph(int leaves);

Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
// Adds vertex n attached to v, returning a graph of order n+1.
Graph add_pendant(const Graph& g, int v);
// Removes vertex v (and its incident edges), relabeling vertices above it.
Graph remove_vertex(const Graph& g, int v);

}  // namespace qorder
