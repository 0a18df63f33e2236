#include "qorder/exactpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qorder {

BigInt UnivarPoly::eval(const BigInt& x0) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

void UnivarPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BivarPoly BivarPoly::constant(BigInt c) {
    BivarPoly p;
    if (c != 0) p.c_[{0, 0}] = std::move(c);
    return p;
}

BivarPoly BivarPoly::var_x() {
    BivarPoly p;
    p.c_[{1, 0}] = 1;
    return p;
}

BivarPoly BivarPoly::var_m() {
    BivarPoly p;
    p.c_[{0, 1}] = 1;
    return p;
}

BivarPoly BivarPoly::from_terms(std::vector<std::tuple<long long, int, int>> terms) {
    BivarPoly p;
    for (auto [c, dx, dm] : terms) {
        auto& slot = p.c_[{dx, dm}];
        slot += c;
        if (slot == 0) p.c_.erase({dx, dm});
    }
    return p;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, v] : o.c_) {
        auto& slot = r.c_[k];
        slot += v;
        if (slot == 0) r.c_.erase(k);
    }
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : o.c_) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            auto& slot = r.c_[k];
            slot += va * vb;
            if (slot == 0) r.c_.erase(k);
        }
    return r;
}

BigInt BivarPoly::eval_at(const BigInt& x0, const BigInt& m0) const {
    return substitute_m(m0).eval(x0);
}

UnivarPoly BivarPoly::substitute_m(const BigInt& m0) const {
    UnivarPoly p;
    for (const auto& [k, v] : c_) {
        auto [dx, dm] = k;
        if (static_cast<int>(p.coeffs.size()) <= dx) p.coeffs.resize(dx + 1, BigInt(0));
        BigInt mp = 1;
        for (int j = 0; j < dm; ++j) mp *= m0;
        p.coeffs[dx] += v * mp;
    }
    p.normalize();
    return p;
}

BigInt BivarPoly::coeff(int deg_x, int deg_m) const {
    auto it = c_.find({deg_x, deg_m});
    return it == c_.end() ? BigInt(0) : it->second;
}

void BivarPoly::set_coeff(int deg_x, int deg_m, BigInt v) {
    if (v == 0)
        c_.erase({deg_x, deg_m});
    else
        c_[{deg_x, deg_m}] = std::move(v);
}

std::string BivarPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : c_) {  // descending (deg_x, deg_m)
        auto [dx, dm] = k;
        BigInt a = v;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || (dx == 0 && dm == 0)) factors.push_back(a.str());
        if (dx == 1) factors.push_back("x");
        if (dx > 1) factors.push_back("x^" + std::to_string(dx));
        if (dm == 1) factors.push_back("m");
        if (dm > 1) factors.push_back("m^" + std::to_string(dm));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

std::vector<std::vector<long long>> ParamMatrix::substitute(long long m) const {
    std::vector<std::vector<long long>> r(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = at(i, j).a + at(i, j).b * m;
    return r;
}

namespace {

// Polynomials in m only, coeffs[k] = coeff of m^k.
using PolyM = std::vector<BigInt>;

PolyM pm_add(const PolyM& a, const PolyM& b) {
    PolyM r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

PolyM pm_mul(const PolyM& a, const PolyM& b) {
    if (a.empty() || b.empty()) return {};
    PolyM r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

using MatM = std::vector<PolyM>;  // n*n row-major

MatM mat_mul(const MatM& a, const MatM& b, int n) {
    MatM r(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyM s;
            for (int k = 0; k < n; ++k)
                s = pm_add(s, pm_mul(a[i * n + k], b[k * n + j]));
            r[i * n + j] = std::move(s);
        }
    return r;
}

}  // namespace

BivarPoly charpoly(const ParamMatrix& m) {
    const int n = m.n;
    if (n == 0) return BivarPoly::constant(1);
    MatM A(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& e = m.at(i, j);
            A[i * n + j] = {BigInt(e.a), BigInt(e.b)};
            while (!A[i * n + j].empty() && A[i * n + j].back() == 0) A[i * n + j].pop_back();
        }

    // p(x) = x^n + c_1 x^{n-1} + ... + c_n with A_1 = A, c_k = -tr(A_k)/k,
    // A_{k+1} = A (A_k + c_k I).  Each division by k is exact.
    std::vector<PolyM> cs;
    MatM Ak = A;
    for (int k = 1; k <= n; ++k) {
        PolyM tr;
        for (int i = 0; i < n; ++i) tr = pm_add(tr, Ak[i * n + i]);
        PolyM ck(tr.size());
        for (std::size_t i = 0; i < tr.size(); ++i) {
            if (tr[i] % k != 0)
                throw std::logic_error("charpoly: non-exact division in recurrence");
            ck[i] = -tr[i] / k;
        }
        cs.push_back(ck);
        if (k < n) {
            MatM B = Ak;
            for (int i = 0; i < n; ++i) B[i * n + i] = pm_add(B[i * n + i], ck);
            Ak = mat_mul(A, B, n);
        }
    }

    BivarPoly p;
    p.set_coeff(n, 0, 1);
    for (int k = 1; k <= n; ++k)
        for (std::size_t j = 0; j < cs[k - 1].size(); ++j)
            p.set_coeff(n - k, static_cast<int>(j), cs[k - 1][j]);
    return p;
}

namespace {

BivarPoly X() { return BivarPoly::var_x(); }
BivarPoly M() { return BivarPoly::var_m(); }
BivarPoly C(long long v) { return BivarPoly::constant(v); }

// coefficient lists {(c, deg_x, deg_m)} transcribed from the printed formulas
BivarPoly phi1() {
    // x^3 - n x^2 + (3n-8)x - n
    return BivarPoly::from_terms({{1, 3, 0}, {-1, 2, 1}, {3, 1, 1}, {-8, 1, 0}, {-1, 0, 1}});
}

BivarPoly phi2() {
    // x^5 - (n+5)x^4 + (7n+1)x^3 - (15n-17)x^2 + (10n-8)x - 2n
    return BivarPoly::from_terms({{1, 5, 0},
                                  {-1, 4, 1},
                                  {-5, 4, 0},
                                  {7, 3, 1},
                                  {1, 3, 0},
                                  {-15, 2, 1},
                                  {17, 2, 0},
                                  {10, 1, 1},
                                  {-8, 1, 0},
                                  {-2, 0, 1}});
}

}  // namespace

BivarPoly named_poly(const std::string& id, int g) {
    if (id == "phi1") return phi1();
    if (id == "phi2") return phi2();
    if (id == "phiB2")
        return BivarPoly::from_terms(
            {{1, 3, 0}, {-1, 2, 1}, {-2, 2, 0}, {3, 1, 1}, {-3, 1, 0}, {-8, 0, 0}});
    if (id == "phiG13")
        return BivarPoly::from_terms({{1, 5, 0},
                                      {-1, 4, 1},
                                      {-5, 4, 0},
                                      {6, 3, 1},
                                      {3, 3, 0},
                                      {-9, 2, 1},
                                      {1, 2, 0},
                                      {3, 1, 1},
                                      {8, 1, 0},
                                      {-4, 0, 0}});
    if (id == "phiGv3")
        return BivarPoly::from_terms({{1, 5, 0},
                                      {-1, 4, 1},
                                      {-5, 4, 0},
                                      {6, 3, 1},
                                      {4, 3, 0},
                                      {-10, 2, 1},
                                      {2, 2, 0},
                                      {3, 1, 1},
                                      {12, 1, 0},
                                      {-4, 0, 0}});
    if (id == "phiT2")
        return BivarPoly::from_terms({{1, 4, 0},
                                      {-1, 3, 1},
                                      {-3, 3, 0},
                                      {4, 2, 1},
                                      {-3, 2, 0},
                                      {-1, 1, 1},
                                      {-1, 1, 0}});
    if (id == "phiG04")
        return BivarPoly::from_terms(
            {{1, 4, 0}, {-1, 3, 1}, {-3, 3, 0}, {4, 2, 1}, {-2, 2, 0}, {-2, 1, 1}});
    if (id == "h1")
        return BivarPoly::from_terms({{1, 6, 0},
                                      {-17, 5, 0},
                                      {110, 4, 0},
                                      {-378, 3, 0},
                                      {716, 2, 0},
                                      {-720, 1, 0},
                                      {312, 0, 0}});
    if (id == "h2") {
        // (q^4-10q^3+42q^2-84q+72)(q-(m-g+2)) + 4(q^2-6q+12)(q-1)^2 (q-g)
        auto p1 = BivarPoly::from_terms(
            {{1, 4, 0}, {-10, 3, 0}, {42, 2, 0}, {-84, 1, 0}, {72, 0, 0}});
        auto p2 = X() - (M() - C(g) + C(2));
        auto p3 = BivarPoly::from_terms({{1, 2, 0}, {-6, 1, 0}, {12, 0, 0}});
        auto q1 = X() - C(1);
        return p1 * p2 + C(4) * p3 * q1 * q1 * (X() - C(g));
    }
    if (id == "h3") {
        // (q^2-4q+6)(q^2-6q+12)(q^2-2q+m-g)
        auto a = BivarPoly::from_terms({{1, 2, 0}, {-4, 1, 0}, {6, 0, 0}});
        auto b = BivarPoly::from_terms({{1, 2, 0}, {-6, 1, 0}, {12, 0, 0}});
        auto c = BivarPoly::from_terms({{1, 2, 0}, {-2, 1, 0}, {1, 0, 1}}) - C(g);
        return a * b * c;
    }
    if (id == "h")  // (13-3m)x + m-3
        return BivarPoly::from_terms({{13, 1, 0}, {-3, 1, 1}, {1, 0, 1}, {-3, 0, 0}});
    throw std::invalid_argument("named_poly: unknown id '" + id + "'");
}

ParamMatrix named_matrix(const std::string& id) {
    auto from_rows = [](int n, std::vector<std::vector<std::pair<long long, long long>>> rows) {
        ParamMatrix pm;
        pm.n = n;
        pm.e.resize(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pm.at(i, j) = {rows[i][j].first, rows[i][j].second};
        return pm;
    };
    using P = std::pair<long long, long long>;  // a + b*m
    const P O{0, 0}, I{1, 0};
    if (id == "B2")
        return from_rows(3, {{{3, 0}, I, O}, {{4, 0}, {-2, 1}, {-6, 1}}, {O, I, I}});
    if (id == "G13")
        return from_rows(5, {{{-2, 1}, I, I, O, {-4, 1}},
                             {I, {3, 0}, I, I, O},
                             {I, I, {2, 0}, O, O},
                             {O, I, O, I, O},
                             {I, O, O, O, I}});
    if (id == "Gv3")
        return from_rows(5, {{{-2, 1}, I, O, {-5, 1}, {2, 0}},
                             {I, {2, 0}, I, O, O},
                             {O, I, I, O, O},
                             {I, O, O, I, O},
                             {I, O, O, O, {3, 0}}});
    if (id == "T2")
        return from_rows(4, {{{-2, 1}, I, O, {-3, 1}},
                             {I, {3, 0}, {2, 0}, O},
                             {O, I, I, O},
                             {I, O, O, I}});
    if (id == "G04")
        return from_rows(4, {{{-2, 1}, {2, 0}, O, {-4, 1}},
                             {I, {2, 0}, I, O},
                             {O, {2, 0}, {2, 0}, O},
                             {I, O, O, I}});
    throw std::invalid_argument("named_matrix: unknown id '" + id + "'");
}

double largest_root(const UnivarPoly& p, double lo, double hi, double tol) {
    if (p.coeffs.empty()) throw std::invalid_argument("largest_root: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("largest_root: empty bracket");

    // exact sign of p at a double value (doubles are dyadic rationals)
    auto sign_at = [&](double t) -> int {
        int exp2 = 0;
        double frac = std::frexp(t, &exp2);
        // t = num * 2^e with num an integer
        BigInt num = static_cast<long long>(std::ldexp(frac, 53));
        int e = exp2 - 53;
        const int d = p.degree();
        // evaluate sum c_i num^i 2^{e i - E}, E = min over i of e*i (e < 0 in practice)
        const long long E = std::min<long long>(0, static_cast<long long>(e) * d);
        BigInt total = 0;
        BigInt npow = 1;
        for (int i = 0; i <= d; ++i) {
            long long shift = static_cast<long long>(e) * i - E;
            BigInt term = p.coeffs[i] * npow;
            total += term << static_cast<unsigned>(shift);
            npow *= num;
        }
        if (total > 0) return 1;
        if (total < 0) return -1;
        return 0;
    };

    const int shi = sign_at(hi);
    if (shi == 0) return hi;
    int slo = sign_at(lo);
    if (slo == shi)
        throw std::invalid_argument("largest_root: no sign change on bracket");
    double a = lo, b = hi;
    while (b - a > tol) {
        double mid = a + (b - a) / 2;
        if (mid <= a || mid >= b) break;
        if (sign_at(mid) == shi)
            b = mid;
        else
            a = mid;
    }
    return a + (b - a) / 2;
}

std::vector<std::string> identity_ids() {
    return {"eq2-odd-g", "eq2-g4", "eq4", "eq5", "eq6", "eq7",
            "phi1-quotient", "phi2-quotient"};
}

}  // namespace qorder
