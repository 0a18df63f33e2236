#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qorder/families.hpp"
#include "qorder/graph.hpp"

namespace qorder {

inline constexpr int kDefaultEnumCap = 12;
inline constexpr int kHardEnumCap = 13;
inline constexpr double kTheoremGapWarn = 1e-6;

// Girth-based class selection: Any realizes G_m, Equal(g) realizes G(m,g),
// AtLeast(g) realizes G(m,>=g).  Equal/AtLeast exclude trees.
struct ClassFilter {
    enum class Mode { Any, Equal, AtLeast };
    Mode mode = Mode::Any;
    int g = 0;
    std::optional<int> max_degree;

    static ClassFilter any() { return {}; }
    static ClassFilter equal(int g);
    static ClassFilter at_least(int g);

    bool admits(const Graph& graph) const;
    std::string to_string() const;
};

// One representative per isomorphism class of connected graphs with m edges
// passing the filter, sorted by certificate.  Throws above the cap.
std::vector<Graph> enumerate_graphs(int m, const ClassFilter& f,
                                    int cap = kDefaultEnumCap);
long long count_graphs(int m, const ClassFilter& f, int cap = kDefaultEnumCap);

struct RankRow {
    int rank = 0;             // 1-based; ties share a rank
    double q = 0;
    double gap = 0;           // q - q(next distinct row); 0 for the last row
    bool tied_with_next = false;
    std::string graph6;
    std::optional<FamilySpec> family;
    int delta = 0;
    GirthValue girth = GirthValue::acyclic();
};

struct RankTable {
    int m = 0;
    ClassFilter filter;
    long long class_size = 0;
    bool truncated = false;   // k exceeded the class size
    std::vector<RankRow> rows;
};

RankTable rank_top_k(int m, const ClassFilter& f, int k, int cap = kDefaultEnumCap);

struct VerdictReport {
    std::string id;
    std::string params;
    std::vector<std::string> expected;  // formatted FamilySpec chain
    std::vector<std::string> observed;
    bool pass = false;
    bool warning = false;               // some strict gap below kTheoremGapWarn
    double min_gap = 0;
    long long enumerated = 0;           // classes inspected (0 when not used)
    long long in_class = 0;
    std::vector<std::string> notes;
};

// ids: thm-1.1, thm-1.2, thm-1.3, thm-1.4, lem-3.1, lem-3.2, lem-3.4,
// lem-3.5, cor-2.2, cor-2.3, cor-2.4.  g2 is only read by cor-2.3.
// Hypothesis violations throw; a false verdict is a value.
VerdictReport verify_theorem(const std::string& id, int m, int g = 0, int g2 = 0,
                             int cap = kDefaultEnumCap);
std::vector<std::string> theorem_ids();

std::string rank_table_csv(const RankTable& t);

}  // namespace qorder
