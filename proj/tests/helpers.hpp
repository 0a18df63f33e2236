#pragma once

// Test-only oracles kept deliberately independent of the library internals:
// a dense Jacobi eigensolver, a permutation-based canonical form, and a
// brute-force isomorphism test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "qorder/graph.hpp"
#include "qorder/spectral.hpp"

namespace testutil {

// Largest eigenvalue of Q = D + A by cyclic Jacobi sweeps.
inline double jacobi_q(const qorder::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) a[v][v] = g.degree(v);
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    double best = a[0][0];
    for (int i = 1; i < n; ++i) best = std::max(best, a[i][i]);
    return best;
}

// Upper-triangle adjacency bits under a relabeling, packed into a uint64
// (valid for n <= 11: 55 bits).
inline std::uint64_t perm_code(const qorder::Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(perm[i], perm[j])) code |= 1ull << bit;
    return code;
}

// Minimum code over all n! relabelings; n <= 9 or so.
inline std::uint64_t min_perm_code(const qorder::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = perm_code(g, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, perm_code(g, perm));
    return best;
}

// Brute-force isomorphism by backtracking on degree-compatible assignments.
inline bool brute_isomorphic(const qorder::Graph& a, const qorder::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[u] != db[w]) continue;
            bool ok = true;
            for (int v = 0; v < u && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(w, map[v])) ok = false;
            if (!ok) continue;
            map[u] = w;
            used[w] = true;
            if (place(u + 1)) return true;
            used[w] = false;
            map[u] = -1;
        }
        return false;
    };
    return place(0);
}

}  // namespace testutil
