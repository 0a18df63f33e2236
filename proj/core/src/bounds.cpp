#include "qorder/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qorder/exactpoly.hpp"

namespace qorder {
namespace {

// exact evaluation of p at a dyadic point, converted to double at the end
double eval_exact(const UnivarPoly& p, double t) {
    int exp2 = 0;
    const double frac = std::frexp(t, &exp2);
    const BigInt num = static_cast<long long>(std::ldexp(frac, 53));
    const long long e = exp2 - 53;
    const int d = p.degree();
    if (d < 0) return 0.0;
    const long long E = std::min<long long>(0, e * d);
    BigInt total = 0;
    BigInt npow = 1;
    for (int i = 0; i <= d; ++i) {
        total += (p.coeffs[i] * npow) << static_cast<unsigned>(e * i - E);
        npow *= num;
    }
    return std::ldexp(total.convert_to<double>(), static_cast<int>(E));
}

}  // namespace

double entry_bound(double q, int d) {
    if (d < 1) throw std::invalid_argument("entry_bound: degree must be >= 1");
    if (q <= d) return 1.0;
    const double t = q - d;
    return std::sqrt(1.0 / (1.0 + t * t / d));
}

double feng_bound(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("feng_bound: graph is disconnected");
    double best = 0;
    for (int u = 0; u < g.order(); ++u) {
        const int du = g.degree(u);
        if (du == 0) continue;
        long long s = 0;
        for (int v : g.neighbors(u)) s += g.degree(v);
        best = std::max(best, du + static_cast<double>(s) / du);
    }
    return best;
}

double degree_bound_upper(int m, int s) {
    if (m < 5) throw std::invalid_argument("degree_bound_upper: m >= 5 required");
    if (3 * s < 2 * m)
        throw std::invalid_argument("degree_bound_upper: s >= 2m/3 required");
    return s + 2.0;
}

double degree_bound_lower(int s) { return s + 1.0; }

std::pair<double, double> gi_bracket(int m, int g) {
    if (g < 3) throw std::invalid_argument("gi_bracket: g >= 3 required");
    if (m < g + 3) throw std::invalid_argument("gi_bracket: m >= g+3 required");
    const double lo = m - g + 2.0;
    return {lo, lo + 2.0 / (m - g + 1)};
}

X0Report x0_lower_bound(int m, int g, double q) {
    if (!(q > 9.0) || !(q > m - g + 2.0))
        throw std::invalid_argument("x0_lower_bound: requires q > max(9, m-g+2)");
    const double h1 = eval_exact(named_poly("h1").substitute_m(m), q);
    const double h2 = eval_exact(named_poly("h2", g).substitute_m(m), q);
    const double h3 = eval_exact(named_poly("h3", g).substitute_m(m), q);
    if (h3 == 0.0) throw std::domain_error("x0_lower_bound: h3 vanishes");
    X0Report r;
    r.h1_positive = h1 > 0;
    r.h2_positive = h2 > 0;
    r.h3_positive = h3 > 0;
    r.bound = (h1 + h2) / (2.0 * h3) + 0.5;
    return r;
}

}  // namespace qorder
