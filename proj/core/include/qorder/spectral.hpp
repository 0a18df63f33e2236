#pragma once

#include <vector>

#include "qorder/graph.hpp"

namespace qorder {

inline constexpr double kDefaultTol = 1e-12;   // relative to the max-norm of Q
inline constexpr double kTieTol = 1e-9;        // entry comparisons on unit vectors

// Dense signless Laplacian D + A, row-major.
struct QMatrix {
    int n = 0;
    std::vector<double> a;
    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }
};

QMatrix q_matrix(const Graph& g);

struct PerronPair {
    double q = 0;                // Q-index (spectral radius of Q)
    std::vector<double> x;       // unit Perron vector, entrywise > 0 for connected input
    double residual = 0;         // max-norm of Q x - q x
};

// Power iteration with all-ones start and Rayleigh-quotient estimate.
// Throws on disconnected input or when the residual target is not reached
// within the iteration cap.
PerronPair q_index(const Graph& g, double tol = kDefaultTol);

double perron_entry(const Graph& g, int u, double tol = kDefaultTol);

struct SwitchReport {
    bool hypothesis_holds = false;
    double q_before = 0;
    double q_after = 0;
    bool conclusion_holds = false;  // q_after > q_before + gap tolerance
};

// Edge rotation: G' = G - {vw : w in W} + {uw : w in W}.  Hypothesis x_u >= x_v.
// Throws when the rewiring is not simple or disconnects the graph.
SwitchReport check_rotation(const Graph& g, int u, int v, const std::vector<int>& ws,
                            double tol = kDefaultTol);

// Quadrilateral switch: G' = G - ab - cd + ad + bc.
// Hypothesis (x_a - x_c)(x_d - x_b) > 0 with both factors above the tie tolerance.
SwitchReport check_quad_switch(const Graph& g, int a, int b, int c, int d,
                               double tol = kDefaultTol);

}  // namespace qorder
