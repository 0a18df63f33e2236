#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qorder {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial, coeffs[k] is the coefficient of degree k; normalized
// (no trailing zeros).
struct UnivarPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt eval(const BigInt& x0) const;
    void normalize();
    bool operator==(const UnivarPoly&) const = default;
};

// Exact polynomial in Z[x, m].  The second variable doubles as the paper's n
// for the order-parameterized families.
class BivarPoly {
public:
    BivarPoly() = default;
    static BivarPoly constant(BigInt c);
    static BivarPoly var_x();
    static BivarPoly var_m();
    // terms: {coeff, deg_x, deg_m}
    static BivarPoly from_terms(std::vector<std::tuple<long long, int, int>> terms);

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator-() const;
    bool operator==(const BivarPoly&) const = default;

    bool is_zero() const { return c_.empty(); }
    BigInt eval_at(const BigInt& x0, const BigInt& m0) const;
    UnivarPoly substitute_m(const BigInt& m0) const;  // -> polynomial in x

    using TermMap =
        std::map<std::pair<int, int>, BigInt, std::greater<std::pair<int, int>>>;
    const TermMap& terms() const { return c_; }
    BigInt coeff(int deg_x, int deg_m) const;
    void set_coeff(int deg_x, int deg_m, BigInt v);

    // Canonical descending-degree text, e.g. "x^3 - x^2*m - 2*x^2 + 3".
    std::string to_string() const;

private:
    TermMap c_;
};

// Square matrix with entries a + b*m, integer-linear in the size parameter.
struct ParamMatrix {
    struct Entry {
        long long a = 0, b = 0;  // a + b*m
    };
    int n = 0;
    std::vector<Entry> e;
    Entry& at(int i, int j) { return e[i * n + j]; }
    const Entry& at(int i, int j) const { return e[i * n + j]; }

    std::vector<std::vector<long long>> substitute(long long m) const;
};

// det(x I - M), exact in x and m, by the division-free Faddeev-LeVerrier
// recurrence over Z[m] (all interior divisions are exact).
BivarPoly charpoly(const ParamMatrix& m);

// The polynomials printed in the source theorems, transcribed exactly.
// ids: phi1, phi2, phiB2, phiG13, phiGv3, phiT2, phiG04, h1, h2, h3, h.
// h2 and h3 take the girth as an extra integer parameter.
BivarPoly named_poly(const std::string& id, int g = 0);

// The printed quotient matrices: ids B2, G13, Gv3, T2, G04.
ParamMatrix named_matrix(const std::string& id);

// Exact verification of the polynomial identities (rational ones after
// clearing denominators).  ids: eq2-odd-g, eq2-g4, eq4, eq5, eq6, eq7,
// phi1-quotient, phi2-quotient.  False is a value, not an error.
bool verify_identity(const std::string& id);
std::vector<std::string> identity_ids();

// Bisection with exact sign evaluation at dyadic points.  The bracket must
// change sign and the polynomial must have no root above the upper end.
double largest_root(const UnivarPoly& p, double lo, double hi, double tol = 1e-12);

}  // namespace qorder
