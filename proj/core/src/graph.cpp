#include "qorder/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qorder {

int GirthValue::value() const {
    if (is_acyclic()) throw std::logic_error("girth: acyclic graph has no cycle length");
    return g_;
}

int Graph::max_degree() const {
    int d = 0;
    for (int x : degrees_) d = std::max(d, x);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degrees_[v]);
    std::uint64_t m = adj_[v];
    while (m) {
        int u = __builtin_ctzll(m);
        out.push_back(u);
        m &= m - 1;
    }
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edge_list) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("make_graph: vertex count out of range");
    std::set<Edge> norm;
    for (auto [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("make_graph: endpoint out of range");
        if (u > v) std::swap(u, v);
        norm.insert({u, v});
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(norm.begin(), norm.end());
    g.adj_.assign(n, 0);
    g.degrees_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
        g.adj_[u] |= 1ull << v;
        g.adj_[v] |= 1ull << u;
        ++g.degrees_[u];
        ++g.degrees_[v];
    }
    return g;
}

int component_count(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t m = g.neighbors_mask(v);
            while (m) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
        }
        ++ncomp;
    }
    return ncomp;
}

bool is_connected(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("is_connected: empty graph");
    return component_count(g) == 1;
}

GirthValue girth(const Graph& g) {
    const int n = g.order();
    // |E| = n - #components iff the graph is a forest.
    if (g.size() == n - component_count(g)) return GirthValue::acyclic();
    // Per-root BFS: shortest cycle through edges seen from each root.
    int best = 0x7fffffff;
    std::vector<int> dist(n), parent(n), queue;
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[r] = 0;
        parent[r] = -1;
        queue.push_back(r);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (2 * dist[v] >= best) break;
            std::uint64_t m = g.neighbors_mask(v);
            while (m) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return GirthValue::finite(best);
}

Graph cycle_graph(int g) {
    if (g < 3) throw std::invalid_argument("cycle_graph: length must be >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < g; ++i) es.push_back({i, (i + 1) % g});
    return make_graph(g, es);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: order must be >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return make_graph(n, es);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need at least one leaf");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return make_graph(leaves + 1, es);
}

Graph add_edge(const Graph& g, int u, int v) {
    auto es = g.edges();
    es.push_back({u, v});
    return make_graph(g.order(), es);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    auto es = g.edges();
    auto it = std::find(es.begin(), es.end(), Edge{u, v});
    if (it == es.end()) throw std::invalid_argument("remove_edge: edge not present");
    es.erase(it);
    return make_graph(g.order(), es);
}

Graph add_pendant(const Graph& g, int v) {
    auto es = g.edges();
    es.push_back({v, g.order()});
    return make_graph(g.order() + 1, es);
}

Graph remove_vertex(const Graph& g, int v) {
    std::vector<Edge> es;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        es.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    }
    return make_graph(g.order() - 1, es);
}

}  // namespace qorder
