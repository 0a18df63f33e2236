#include "qorder/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qorder {

QMatrix q_matrix(const Graph& g) {
    const int n = g.order();
    QMatrix q;
    q.n = n;
    q.a.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v) q.at(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        q.at(u, v) = 1.0;
        q.at(v, u) = 1.0;
    }
    return q;
}

PerronPair q_index(const Graph& g, double tol) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("q_index: empty graph");
    if (tol <= 0) throw std::invalid_argument("q_index: tolerance must be positive");
    if (!is_connected(g)) throw std::invalid_argument("q_index: graph is disconnected");
    if (n == 1) return {0.0, {1.0}, 0.0};

    const QMatrix Q = q_matrix(g);
    const double scale = static_cast<double>(g.max_degree());  // max-norm of Q
    const double target = tol * scale;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double q = 0, residual = 0;
    constexpr long kIterationCap = 1000000;
    for (long it = 0; it < kIterationCap; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0;
            const double* row = &Q.a[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
        }
        double rq = 0;
        for (int i = 0; i < n; ++i) rq += x[i] * y[i];  // Rayleigh quotient (x unit)
        q = rq;
        residual = 0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - q * x[i]));
        double norm = 0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (residual <= target) {
            // Q is primitive for connected input, so the limit is entrywise positive.
            for (double& v : x) v = std::abs(v);
            return {q, x, residual};
        }
    }
    throw std::runtime_error("q_index: residual target not reached within iteration cap");
}

double perron_entry(const Graph& g, int u, double tol) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("perron_entry: bad vertex");
    return q_index(g, tol).x[u];
}

SwitchReport check_rotation(const Graph& g, int u, int v, const std::vector<int>& ws,
                            double tol) {
    const int n = g.order();
    if (u == v) throw std::invalid_argument("check_rotation: u and v must differ");
    if (ws.empty()) throw std::invalid_argument("check_rotation: W must be nonempty");
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("check_rotation: vertex out of range");
    Graph h = g;
    for (int w : ws) {
        if (w < 0 || w >= n) throw std::invalid_argument("check_rotation: vertex out of range");
        if (w == u) throw std::invalid_argument("check_rotation: u must not be in W");
        if (!g.has_edge(v, w))
            throw std::invalid_argument("check_rotation: W must lie in N(v)");
        if (g.has_edge(u, w))
            throw std::invalid_argument("check_rotation: rewiring would duplicate an edge");
        h = add_edge(remove_edge(h, v, w), u, w);
    }
    if (!is_connected(h))
        throw std::invalid_argument("check_rotation: rewiring disconnects the graph");

    const PerronPair before = q_index(g, tol);
    const PerronPair after = q_index(h, tol);
    SwitchReport r;
    r.hypothesis_holds = before.x[u] >= before.x[v] - kTieTol;
    r.q_before = before.q;
    r.q_after = after.q;
    r.conclusion_holds = r.q_after > r.q_before + kTieTol;
    return r;
}

SwitchReport check_quad_switch(const Graph& g, int a, int b, int c, int d, double tol) {
    const int n = g.order();
    const int vs[4] = {a, b, c, d};
    for (int x : vs)
        if (x < 0 || x >= n) throw std::invalid_argument("check_quad_switch: vertex out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j])
                throw std::invalid_argument("check_quad_switch: vertices must be distinct");
    if (!g.has_edge(a, b) || !g.has_edge(c, d))
        throw std::invalid_argument("check_quad_switch: ab and cd must be edges");
    if (g.has_edge(a, d) || g.has_edge(b, c))
        throw std::invalid_argument("check_quad_switch: ad and bc must be non-edges");
    Graph h = add_edge(add_edge(remove_edge(remove_edge(g, a, b), c, d), a, d), b, c);
    if (!is_connected(h))
        throw std::invalid_argument("check_quad_switch: switch disconnects the graph");

    const PerronPair before = q_index(g, tol);
    const PerronPair after = q_index(h, tol);
    SwitchReport r;
    const double fa = before.x[a] - before.x[c];
    const double fb = before.x[d] - before.x[b];
    r.hypothesis_holds = std::abs(fa) > kTieTol && std::abs(fb) > kTieTol && fa * fb > 0;
    r.q_before = before.q;
    r.q_after = after.q;
    r.conclusion_holds = r.q_after > r.q_before + kTieTol;
    return r;
}

}  // namespace qorder
