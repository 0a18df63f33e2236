#pragma once

#include <string>
#include <utility>

#include "qorder/graph.hpp"

namespace qorder {

struct BoundReport {
    std::string bound_name;
    std::string inputs;        // human-readable parameter list
    double bound_value = 0;
    double observed_value = 0;
    bool holds = false;
    double slack = 0;          // signed margin in the bound's direction
};

// Upper bound on the Perron entry x_u: sqrt(1 / (1 + (q-d)^2/d)).
// Vacuous (returns 1) when q <= d.  Throws for d < 1.
double entry_bound(double q, int d);

// max_u d(u) + (sum of neighbor degrees)/d(u); an upper bound on q(G).
double feng_bound(const Graph& g);

// q(G) <= s+2 whenever Delta(G) <= s, valid for s >= 2m/3, m >= 5.
double degree_bound_upper(int m, int s);
// q(G) > s+1 whenever s <= Delta(G) <= m-1.
double degree_bound_lower(int s);

// (m-g+2, m-g+2 + 2/(m-g+1)]: q(Gi(m,g,i)) lies in this bracket for m >= g+3.
std::pair<double, double> gi_bracket(int m, int g);

struct X0Report {
    double bound = 0;  // lower bound on x_0^2
    bool h1_positive = false;
    bool h2_positive = false;
    bool h3_positive = false;
};

// (h1(q) + h2(q)) / (2 h3(q)) + 1/2 with h1,h2,h3 evaluated exactly.
// Requires q > max(9, m-g+2); throws on h3 = 0.
X0Report x0_lower_bound(int m, int g, double q);

}  // namespace qorder
