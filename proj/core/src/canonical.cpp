#include "qorder/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qorder/graph6.hpp"

namespace qorder {
namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
    std::uint64_t m = 0;
    for (int v : cell) m |= 1ull << v;
    return m;
}

// Equitable refinement: split every cell by neighbor counts into every other
// cell, fragments ordered by count.  The cell order produced depends only on
// isomorphism invariants, which makes the minimal leaf a canonical form.
void refine(const std::vector<std::uint64_t>& adj, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
            const std::uint64_t smask = cell_mask(cells[si]);
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                auto& cell = cells[ci];
                if (cell.size() < 2) continue;
                auto key = [&](int v) { return std::popcount(adj[v] & smask); };
                const int k0 = key(cell[0]);
                bool uniform = true;
                for (int v : cell)
                    if (key(v) != k0) { uniform = false; break; }
                if (uniform) continue;
                std::stable_sort(cell.begin(), cell.end(),
                                 [&](int a, int b) { return key(a) < key(b); });
                Cells frags;
                for (int v : cell) {
                    if (frags.empty() || key(frags.back()[0]) != key(v)) frags.push_back({});
                    frags.back().push_back(v);
                }
                cells.erase(cells.begin() + ci);
                cells.insert(cells.begin() + ci, frags.begin(), frags.end());
                changed = true;
                break;
            }
        }
    }
}

struct Searcher {
    const std::vector<std::uint64_t>& adj;
    int n;
    bool have_best = false;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_perm;

    void leaf(const Cells& cells) {
        std::vector<int> inv(n), perm(n);
        int pos = 0;
        for (const auto& c : cells) {
            inv[pos] = c[0];
            perm[c[0]] = pos;
            ++pos;
        }
        std::vector<std::uint64_t> code(n, 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t m = adj[inv[i]];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                code[i] |= 1ull << perm[u];
            }
        }
        if (!have_best || code < best_code) {
            have_best = true;
            best_code = std::move(code);
            best_perm = std::move(perm);
        }
    }

    void search(Cells cells) {
        refine(adj, cells);
        std::size_t ti = 0;
        while (ti < cells.size() && cells[ti].size() == 1) ++ti;
        if (ti == cells.size()) {
            leaf(cells);
            return;
        }
        const auto target = cells[ti];
        for (std::size_t k = 0; k < target.size(); ++k) {
            const int v = target[k];
            // Interchangeable vertices (identical neighborhoods up to the
            // pair itself) give identical subtrees; branch once per class.
            bool twin_seen = false;
            for (std::size_t j = 0; j < k && !twin_seen; ++j) {
                const int u = target[j];
                twin_seen = (adj[u] & ~(1ull << v)) == (adj[v] & ~(1ull << u));
            }
            if (twin_seen) continue;
            Cells next(cells.begin(), cells.begin() + ti);
            next.push_back({v});
            std::vector<int> rest;
            for (int u : target)
                if (u != v) rest.push_back(u);
            next.push_back(std::move(rest));
            next.insert(next.end(), cells.begin() + ti + 1, cells.end());
            search(std::move(next));
        }
    }
};

std::vector<int> canonical_perm(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit) throw std::invalid_argument("canonical_certificate: order exceeds limit");
    if (n == 0) return {};
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors_mask(v);
    Searcher s{adj, n};
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    s.search({all});
    return s.best_perm;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int limit) {
    return canonical_perm(g, limit);
}

Certificate canonical_certificate(const Graph& g, int limit) {
    const auto perm = canonical_perm(g, limit);
    std::vector<Edge> es;
    es.reserve(g.size());
    for (auto [u, v] : g.edges()) es.push_back({perm[u], perm[v]});
    return emit_graph6(make_graph(g.order(), es));
}

bool isomorphic(const Graph& a, const Graph& b, int limit) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_certificate(a, limit) == canonical_certificate(b, limit);
}

}  // namespace qorder
