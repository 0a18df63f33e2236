#include "qorder/families.hpp"

#include <stdexcept>

#include "qorder/canonical.hpp"

namespace qorder {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("build: " + msg);
}

LabeledGraph make(const FamilySpec& spec, int n, std::vector<Edge> es,
                  std::map<std::string, int> labels) {
    return {make_graph(n, es), spec, std::move(labels)};
}

std::map<std::string, int> cycle_labels(int g) {
    std::map<std::string, int> lab;
    for (int v = 0; v < g; ++v) lab[std::to_string(v)] = v;
    return lab;
}

std::vector<Edge> cycle_edges(int g) {
    std::vector<Edge> es;
    for (int v = 0; v < g; ++v) es.push_back({v, (v + 1) % g});
    return es;
}

}  // namespace

LabeledGraph build(const FamilySpec& spec) {
    const int m = spec.m, g = spec.g, i = spec.i;
    switch (spec.kind) {
        case FamilyKind::Cycle: {
            require(g >= 3, "Cycle: g >= 3");
            return make(spec, g, cycle_edges(g), cycle_labels(g));
        }
        case FamilyKind::CyclePlus: {
            require(g >= 3, "CyclePlus: g >= 3");
            auto es = cycle_edges(g);
            es.push_back({0, g});
            return make(spec, g + 1, es, cycle_labels(g));
        }
        case FamilyKind::Star: {
            require(m >= 1, "Star: m >= 1");
            std::vector<Edge> es;
            for (int v = 1; v <= m; ++v) es.push_back({0, v});
            return make(spec, m + 1, es, {{"center", 0}});
        }
        case FamilyKind::G0: {
            require(g >= 3 && m >= g, "G0: need g >= 3, m >= g");
            auto es = cycle_edges(g);
            for (int v = g; v < m; ++v) es.push_back({0, v});
            return make(spec, m, es, cycle_labels(g));
        }
        case FamilyKind::Gi: {
            require(g >= 3 && m >= g + 1, "Gi: need g >= 3, m >= g+1");
            require(1 <= i && i <= g / 2, "Gi: need 1 <= i <= floor(g/2)");
            auto es = cycle_edges(g);
            for (int v = g; v < m - 1; ++v) es.push_back({0, v});
            es.push_back({i, m - 1});
            auto lab = cycle_labels(g);
            lab["w"] = m - 1;
            return make(spec, m, es, lab);
        }
        case FamilyKind::Gv: {
            require(g >= 3 && m >= g + 2, "Gv: need g >= 3, m >= g+2");
            auto es = cycle_edges(g);
            for (int v = g; v < m - 2; ++v) es.push_back({0, v});
            es.push_back({0, m - 2});
            es.push_back({m - 2, m - 1});
            auto lab = cycle_labels(g);
            lab["v"] = m - 2;
            lab["v_1"] = m - 1;
            return make(spec, m, es, lab);
        }
        case FamilyKind::B1: {
            require(m >= 5, "B1: m >= 5");
            // triangles 0-1-2 and 0-1-3 sharing edge 01; pendants at 0
            std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
            for (int v = 4; v < m - 1; ++v) es.push_back({0, v});
            return make(spec, m - 1, es, {{"0", 0}, {"1", 1}, {"2", 2}});
        }
        case FamilyKind::B2: {
            require(m >= 6, "B2: m >= 6");
            // triangles 0-1-2 and 0-w1-w2 sharing vertex 0; pendants at 0
            std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
            for (int v = 5; v < m - 1; ++v) es.push_back({0, v});
            return make(spec, m - 1, es,
                        {{"0", 0}, {"1", 1}, {"2", 2}, {"w_1", 3}, {"w_2", 4}});
        }
        case FamilyKind::T1: {
            require(m >= 3, "T1: m >= 3");
            std::vector<Edge> es;
            for (int v = 1; v < m; ++v) es.push_back({0, v});
            es.push_back({1, m});
            return make(spec, m + 1, es, {{"u_0", 1}, {"u_1", m}, {"u_2", 2}});
        }
        case FamilyKind::T2: {
            require(m >= 4, "T2: m >= 4");
            std::vector<Edge> es;
            for (int v = 1; v < m - 1; ++v) es.push_back({0, v});
            es.push_back({1, m - 1});
            es.push_back({1, m});
            return make(spec, m + 1, es, {{"u_3", 0}, {"u_4", 1}});
        }
        case FamilyKind::T3: {
            require(m >= 5, "T3: m >= 5");
            std::vector<Edge> es;
            for (int v = 1; v < m - 1; ++v) es.push_back({0, v});
            es.push_back({1, m - 1});
            es.push_back({2, m});
            return make(spec, m + 1, es, {{"u_5", 1}, {"u_6", m - 1}, {"u_7", m}});
        }
        case FamilyKind::T4: {
            require(m >= 4, "T4: m >= 4");
            std::vector<Edge> es;
            for (int v = 1; v < m - 1; ++v) es.push_back({0, v});
            es.push_back({1, m - 1});
            es.push_back({m - 1, m});
            return make(spec, m + 1, es, {{"u_8", 2}, {"u_9", m - 1}, {"u_10", m}});
        }
        case FamilyKind::Spider3: {
            const int n = m;
            require(n >= 7, "Spider3: n >= 7");
            std::vector<Edge> es;
            for (int v = 1; v <= n - 7; ++v) es.push_back({0, v});
            for (int leg = 0; leg < 3; ++leg) {
                int a = n - 6 + 2 * leg, b = a + 1;
                es.push_back({0, a});
                es.push_back({a, b});
            }
            return make(spec, n, es, {{"center", 0}});
        }
        case FamilyKind::H0: {
            const int n = m;
            require(n >= 6, "H0: n >= 6");
            std::vector<Edge> es = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}};
            for (int v = 6; v < n; ++v) es.push_back({0, v});
            auto lab = cycle_labels(4);
            lab["v"] = 4;
            lab["v_1"] = 5;
            return make(spec, n, es, lab);
        }
    }
    throw std::invalid_argument("build: unknown kind");
}

std::string format_spec(const FamilySpec& s) {
    auto mg = [&](const char* name) {
        return std::string(name) + "(m=" + std::to_string(s.m) + ")";
    };
    switch (s.kind) {
        case FamilyKind::Cycle: return "Cycle(g=" + std::to_string(s.g) + ")";
        case FamilyKind::CyclePlus: return "CyclePlus(g=" + std::to_string(s.g) + ")";
        case FamilyKind::Star: return mg("Star");
        case FamilyKind::G0:
            return "G0(m=" + std::to_string(s.m) + ",g=" + std::to_string(s.g) + ")";
        case FamilyKind::Gi:
            return "Gi(m=" + std::to_string(s.m) + ",g=" + std::to_string(s.g) +
                   ",i=" + std::to_string(s.i) + ")";
        case FamilyKind::Gv:
            return "Gv(m=" + std::to_string(s.m) + ",g=" + std::to_string(s.g) + ")";
        case FamilyKind::B1: return mg("B1");
        case FamilyKind::B2: return mg("B2");
        case FamilyKind::T1: return mg("T1");
        case FamilyKind::T2: return mg("T2");
        case FamilyKind::T3: return mg("T3");
        case FamilyKind::T4: return mg("T4");
        case FamilyKind::Spider3: return "Spider3(n=" + std::to_string(s.m) + ")";
        case FamilyKind::H0: return "H0(n=" + std::to_string(s.m) + ")";
    }
    return "?";
}

FamilySpec parse_spec(const std::string& text) {
    auto lp = text.find('(');
    auto rp = text.rfind(')');
    if (lp == std::string::npos || rp == std::string::npos || rp != text.size() - 1 || rp < lp)
        throw std::invalid_argument("parse_spec: expected Name(key=value,...)");
    const std::string name = text.substr(0, lp);
    std::map<std::string, int> kv;
    std::string body = text.substr(lp + 1, rp - lp - 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        std::string item = body.substr(pos, comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("parse_spec: expected key=value in '" + item + "'");
        try {
            kv[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_spec: bad integer in '" + item + "'");
        }
        pos = comma + 1;
    }
    auto get = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("parse_spec: missing parameter '" + key + "'");
        return it->second;
    };
    if (name == "Cycle") return cycle_spec(get("g"));
    if (name == "CyclePlus") return {FamilyKind::CyclePlus, get("g") + 1, get("g"), 0};
    if (name == "Star") return star_spec(get("m"));
    if (name == "G0") return g0_spec(get("m"), get("g"));
    if (name == "Gi") return gi_spec(get("m"), get("g"), get("i"));
    if (name == "Gv") return gv_spec(get("m"), get("g"));
    if (name == "B1") return b1_spec(get("m"));
    if (name == "B2") return b2_spec(get("m"));
    if (name == "T1") return t_spec(1, get("m"));
    if (name == "T2") return t_spec(2, get("m"));
    if (name == "T3") return t_spec(3, get("m"));
    if (name == "T4") return t_spec(4, get("m"));
    if (name == "Spider3") return spider3_spec(get("n"));
    if (name == "H0") return h0_spec(get("n"));
    throw std::invalid_argument("parse_spec: unknown family '" + name + "'");
}

std::optional<FamilySpec> identify(const Graph& g) {
    const int n = g.order(), m = g.size();
    if (n > kDefaultCertificateLimit) return std::nullopt;
    const Certificate cert = canonical_certificate(g);

    std::vector<FamilySpec> candidates;
    if (n == m && m >= 3) candidates.push_back(cycle_spec(m));
    if (n == m && m >= 4) candidates.push_back({FamilyKind::CyclePlus, m, m - 1, 0});
    if (n == m + 1 && m >= 1) candidates.push_back(star_spec(m));
    if (n == m - 1 && m >= 5) candidates.push_back(b1_spec(m));
    if (n == m - 1 && m >= 6) candidates.push_back(b2_spec(m));
    if (n == m + 1)
        for (int t = 1; t <= 4; ++t)
            if (m >= (t == 1 ? 3 : t == 3 ? 5 : 4)) candidates.push_back(t_spec(t, m));
    if (n == m + 1 && n >= 7) candidates.push_back(spider3_spec(n));
    if (n == m)  // unicyclic kinds
        for (int gg = 3; gg <= m; ++gg) {
            candidates.push_back(g0_spec(m, gg));
            if (m >= gg + 1)
                for (int ii = 1; ii <= gg / 2; ++ii) candidates.push_back(gi_spec(m, gg, ii));
            if (m >= gg + 2) candidates.push_back(gv_spec(m, gg));
        }
    // H0(n) realizes the same graph as Gv(n,4); report the Gv name first
    if (n == m && n >= 6) candidates.push_back(h0_spec(n));

    for (const auto& spec : candidates) {
        try {
            const auto built = build(spec);
            if (built.graph.order() != n) continue;
            if (canonical_certificate(built.graph) == cert) return spec;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace qorder
