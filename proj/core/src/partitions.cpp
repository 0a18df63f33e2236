#include "qorder/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qorder {
namespace {

std::vector<int> cell_of(const Graph& g, const Partition& p) {
    std::vector<int> cell(g.order(), -1);
    for (int i = 0; i < p.cell_count(); ++i)
        for (int v : p.cells[i]) {
            if (v < 0 || v >= g.order())
                throw std::invalid_argument("partition: vertex out of range");
            if (cell[v] != -1) throw std::invalid_argument("partition: cells overlap");
            cell[v] = i;
        }
    for (int v = 0; v < g.order(); ++v)
        if (cell[v] == -1) throw std::invalid_argument("partition: vertex not covered");
    return cell;
}

// neighbor counts of v into each cell
std::vector<long long> profile(const Graph& g, const std::vector<int>& cell, int k, int v) {
    std::vector<long long> row(k, 0);
    for (int u : g.neighbors(v)) ++row[cell[u]];
    return row;
}

}  // namespace

void check_partition(const Graph& g, const Partition& p) {
    for (const auto& c : p.cells)
        if (c.empty()) throw std::invalid_argument("partition: empty cell");
    (void)cell_of(g, p);
}

bool is_equitable(const Graph& g, const Partition& p) {
    const auto cell = cell_of(g, p);
    const int k = p.cell_count();
    for (const auto& c : p.cells) {
        if (c.empty()) throw std::invalid_argument("partition: empty cell");
        const auto ref = profile(g, cell, k, c[0]);
        for (std::size_t t = 1; t < c.size(); ++t)
            if (profile(g, cell, k, c[t]) != ref) return false;
    }
    return true;
}

std::vector<std::vector<long long>> quotient_q_matrix(const Graph& g, const Partition& p) {
    if (!is_equitable(g, p))
        throw std::invalid_argument("quotient_q_matrix: partition is not equitable");
    const auto cell = cell_of(g, p);
    const int k = p.cell_count();
    std::vector<std::vector<long long>> q(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) {
        const int v = p.cells[i][0];
        auto row = profile(g, cell, k, v);
        for (int j = 0; j < k; ++j) q[i][j] = row[j];
        q[i][i] += g.degree(v);  // D part of D + A
    }
    return q;
}

Partition coarsest_equitable(const Graph& g) {
    const int n = g.order();
    Partition p;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    p.cells.push_back(all);
    for (;;) {
        const auto cell = cell_of(g, p);
        const int k = p.cell_count();
        std::vector<std::vector<int>> next;
        bool split = false;
        for (const auto& c : p.cells) {
            // group by neighbor profile, fragments in first-vertex order
            std::vector<std::pair<std::vector<long long>, std::vector<int>>> frags;
            for (int v : c) {
                auto key = profile(g, cell, k, v);
                auto it = std::find_if(frags.begin(), frags.end(),
                                       [&](const auto& f) { return f.first == key; });
                if (it == frags.end())
                    frags.push_back({std::move(key), {v}});
                else
                    it->second.push_back(v);
            }
            if (frags.size() > 1) split = true;
            for (auto& f : frags) next.push_back(std::move(f.second));
        }
        p.cells = std::move(next);
        if (!split) break;
    }
    p.names.assign(p.cells.size(), "");
    return p;
}

bool has_family_partition(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::B2: return true;
        case FamilyKind::Gi: return spec.g == 3 && spec.i == 1 && spec.m >= 5;
        case FamilyKind::Gv: return spec.g == 3 && spec.m >= 6;
        case FamilyKind::T2: return true;
        case FamilyKind::G0: return spec.g == 4 && spec.m >= 5;
        case FamilyKind::Spider3: return spec.m >= 8;
        case FamilyKind::H0: return spec.m >= 7;
        default: return false;
    }
}

Partition family_partition(const FamilySpec& spec) {
    if (!has_family_partition(spec))
        throw std::invalid_argument("family_partition: no printed partition for " +
                                    format_spec(spec));
    const int m = spec.m;
    auto range = [](int lo, int hi) {  // inclusive
        std::vector<int> r;
        for (int v = lo; v <= hi; ++v) r.push_back(v);
        return r;
    };
    Partition p;
    switch (spec.kind) {
        case FamilyKind::B2:
            p.cells = {{1, 2, 3, 4}, {0}, range(5, m - 2)};
            p.names = {"V_1", "{0}", "V_2"};
            break;
        case FamilyKind::Gi:  // G_{1,3}
            p.cells = {{0}, {1}, {2}, {m - 1}, range(3, m - 2)};
            p.names = {"{0}", "{1}", "{2}", "{w}", "V_3"};
            break;
        case FamilyKind::Gv:  // G_{v,3}
            p.cells = {{0}, {m - 2}, {m - 1}, range(3, m - 3), {1, 2}};
            p.names = {"{0}", "{v}", "{v_1}", "V_4", "V_5"};
            break;
        case FamilyKind::T2:
            p.cells = {{0}, {1}, {m - 1, m}, range(2, m - 2)};
            p.names = {"{u_3}", "{u_4}", "V_6", "V_7"};
            break;
        case FamilyKind::G0:  // G_{0,4}
            p.cells = {{0}, {1, 3}, {2}, range(4, m - 1)};
            p.names = {"{0}", "V_8", "{2}", "V_9"};
            break;
        case FamilyKind::Spider3: {
            const int n = m;
            p.cells = {{0}, range(1, n - 7), {n - 6, n - 4, n - 2}, {n - 5, n - 3, n - 1}};
            p.names = {"center", "leaves", "mid", "end"};
            break;
        }
        case FamilyKind::H0: {
            const int n = m;
            p.cells = {{0}, {4}, {5}, {1, 3}, {2}, range(6, n - 1)};
            p.names = {"{0}", "{v}", "{v_1}", "{1,3}", "{2}", "pendants"};
            break;
        }
        default:
            throw std::invalid_argument("family_partition: unreachable");
    }
    return p;
}

ParamMatrix family_param_matrix(FamilyKind kind) {
    // two samples pin the linear entries; a third confirms linearity
    int m0;
    std::function<FamilySpec(int)> at;
    switch (kind) {
        case FamilyKind::B2: m0 = 9; at = [](int m) { return b2_spec(m); }; break;
        case FamilyKind::Gi: m0 = 9; at = [](int m) { return gi_spec(m, 3, 1); }; break;
        case FamilyKind::Gv: m0 = 9; at = [](int m) { return gv_spec(m, 3); }; break;
        case FamilyKind::T2: m0 = 9; at = [](int m) { return t_spec(2, m); }; break;
        case FamilyKind::G0: m0 = 9; at = [](int m) { return g0_spec(m, 4); }; break;
        case FamilyKind::Spider3: m0 = 10; at = [](int n) { return spider3_spec(n); }; break;
        case FamilyKind::H0: m0 = 9; at = [](int n) { return h0_spec(n); }; break;
        default:
            throw std::invalid_argument("family_param_matrix: kind has no printed quotient");
    }
    auto quotient_at = [&](int m) {
        const auto built = build(at(m));
        return quotient_q_matrix(built.graph, family_partition(at(m)));
    };
    const auto q0 = quotient_at(m0);
    const auto q1 = quotient_at(m0 + 1);
    const auto q2 = quotient_at(m0 + 2);
    const int k = static_cast<int>(q0.size());
    ParamMatrix pm;
    pm.n = k;
    pm.e.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const long long b = q1[i][j] - q0[i][j];
            const long long a = q0[i][j] - b * m0;
            if (a + b * (m0 + 2) != q2[i][j])
                throw std::logic_error("family_param_matrix: entry not linear in m");
            pm.at(i, j) = {a, b};
        }
    return pm;
}

}  // namespace qorder
