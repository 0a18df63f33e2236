#pragma once

#include <string>
#include <vector>

#include "qorder/exactpoly.hpp"
#include "qorder/families.hpp"
#include "qorder/graph.hpp"

namespace qorder {

// Ordered vertex partition; cell order fixes quotient-matrix row order.
struct Partition {
    std::vector<std::vector<int>> cells;
    std::vector<std::string> names;  // same length as cells (may be empty strings)

    int cell_count() const { return static_cast<int>(cells.size()); }
};

// Throws when P is not a partition of V(G).
void check_partition(const Graph& g, const Partition& p);

// Every vertex of cell i has the same degree and the same number of
// neighbors in each cell j.
bool is_equitable(const Graph& g, const Partition& p);

// Quotient of Q = D + A: off-diagonal (i,j) is the common neighbor count from
// cell i into cell j; diagonal is common degree plus internal neighbor count.
// Its largest eigenvalue equals q(G).  Throws when P is not equitable.
std::vector<std::vector<long long>> quotient_q_matrix(const Graph& g, const Partition& p);

// The coarsest equitable refinement of the unit partition (degree-then-neighbor
// splitting until stable).  Cell order follows first-vertex order.
Partition coarsest_equitable(const Graph& g);

// The partitions printed for B2, Gi(.,3,1), Gv(.,3), T2, G0(.,4), Spider3, H0.
// Throws for kinds without a printed partition.
Partition family_partition(const FamilySpec& spec);
bool has_family_partition(const FamilySpec& spec);

// Symbolic quotient matrix, entries integer-linear in the size parameter
// (m, or n for Spider3/H0), assembled from the family structure by sampling
// two parameter values and checked linear at a third.  Accepts the same
// kinds as family_partition.
ParamMatrix family_param_matrix(FamilyKind kind);

}  // namespace qorder
