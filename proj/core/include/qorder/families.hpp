#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qorder/graph.hpp"

namespace qorder {

// The named graphs of the ordering theorems.  G_{1,3}, G_{v,3}, G_{0,4} etc.
// are not separate kinds; they are Gi/Gv/G0 at the corresponding girth.
enum class FamilyKind {
    Cycle,      // C_g
    CyclePlus,  // C_g plus one pendant edge (the unique graph with m = g+1)
    Star,       // K_{1,m}
    G0,         // C_g + (m-g) pendants at vertex 0
    Gi,         // C_g + (m-g-1) pendants at 0 + pendant w at vertex i
    Gv,         // C_g + (m-g-2) pendants at 0 + path 0-v-v1
    B1,         // two triangles sharing an edge + (m-5) pendants at a shared endpoint
    B2,         // two triangles sharing a vertex + (m-6) pendants at it
    T1,         // tree, max degree m-1
    T2,         // tree, max degree m-2, support vertex with two leaves
    T3,         // tree, max degree m-2, two pendant paths of length 2
    T4,         // tree, max degree m-2, one pendant path of length 3
    Spider3,    // S_{n,3}: star K_{1,n-7} + three pendant paths of length 2
    H0,         // unicyclic, order n, girth 4, pendants and a P_3 at one C_4 vertex
};

struct FamilySpec {
    FamilyKind kind;
    int m = 0;  // edge count; for Spider3/H0 this slot carries the order n
    int g = 0;  // girth parameter (G0/Gi/Gv/Cycle/CyclePlus)
    int i = 0;  // cycle position of the extra pendant (Gi)

    bool operator==(const FamilySpec&) const = default;
};

struct LabeledGraph {
    Graph graph;
    FamilySpec spec;
    // Paper vertex names ("0".."g-1", "w", "v", "v_1", "w_1", "w_2", "u_0".."u_10",
    // "center") to vertex indices; total for the kind's named vertices.
    std::map<std::string, int> labels;
};

// Throws std::invalid_argument when parameters are out of the kind's range.
LabeledGraph build(const FamilySpec& spec);

// Stable text form, e.g. "Gi(m=12,g=4,i=2)", "Spider3(n=12)".
std::string format_spec(const FamilySpec& spec);
FamilySpec parse_spec(const std::string& text);

// Certificate comparison against every kind realizable at G's size/order.
std::optional<FamilySpec> identify(const Graph& g);

inline FamilySpec cycle_spec(int g) { return {FamilyKind::Cycle, g, g, 0}; }
inline FamilySpec star_spec(int m) { return {FamilyKind::Star, m, 0, 0}; }
inline FamilySpec g0_spec(int m, int g) { return {FamilyKind::G0, m, g, 0}; }
inline FamilySpec gi_spec(int m, int g, int i) { return {FamilyKind::Gi, m, g, i}; }
inline FamilySpec gv_spec(int m, int g) { return {FamilyKind::Gv, m, g, 0}; }
inline FamilySpec b1_spec(int m) { return {FamilyKind::B1, m, 0, 0}; }
inline FamilySpec b2_spec(int m) { return {FamilyKind::B2, m, 0, 0}; }
inline FamilySpec t_spec(int which, int m);
inline FamilySpec spider3_spec(int n) { return {FamilyKind::Spider3, n, 0, 0}; }
inline FamilySpec h0_spec(int n) { return {FamilyKind::H0, n, 0, 0}; }

inline FamilySpec t_spec(int which, int m) {
    switch (which) {
        case 1: return {FamilyKind::T1, m, 0, 0};
        case 2: return {FamilyKind::T2, m, 0, 0};
        case 3: return {FamilyKind::T3, m, 0, 0};
        case 4: return {FamilyKind::T4, m, 0, 0};
    }
    throw std::invalid_argument("t_spec: which must be 1..4");
}

}  // namespace qorder
