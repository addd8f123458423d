#include "mtcomb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtcomb {

using RatPoly = std::vector<Rational>;

void IntPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

PositivityReport log_concavity_check(const IntPolynomial& p) {
    PositivityReport r;
    std::vector<Int> c = p.coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    for (const Int& x : c)
        if (x < 0) r.nonnegative = false;
    int lo = 0;
    while (lo < static_cast<int>(c.size()) && c[lo] == 0) ++lo;
    for (int i = lo; i < static_cast<int>(c.size()); ++i)
        if (c[i] == 0) r.no_internal_zeros = false;
    for (int i = 1; i + 1 < static_cast<int>(c.size()); ++i)
        if (c[i] * c[i] < c[i - 1] * c[i + 1]) r.log_concave = false;
    return r;
}

static RatPoly trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

static RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    return trim(d);
}

// Remainder of a by b, b nonzero.
static RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    a = trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a = trim(a);
    }
    return a;
}

static RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

static RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = trim(a), q;
    q.resize(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0);
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational c = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem = trim(rem);
    }
    if (!rem.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return trim(q);
}

static int sign_at_infinity(const RatPoly& p, int dir) {
    if (p.empty()) return 0;
    int s = p.back() > 0 ? 1 : -1;
    if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

static int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

RealRootReport real_rootedness_check(const IntPolynomial& p) {
    RealRootReport r;
    RatPoly f;
    for (const Int& c : p.coeffs) f.push_back(Rational(c));
    f = trim(f);
    if (f.size() <= 1) {
        r.real_rooted = true;  // constants have no roots at all
        return r;
    }
    RatPoly g = poly_gcd(f, derivative(f));
    RatPoly sq = g.size() <= 1 ? f : poly_div_exact(f, g);
    r.degree = static_cast<int>(sq.size()) - 1;

    // Sturm chain of the squarefree part.
    std::vector<RatPoly> chain{sq, derivative(sq)};
    while (!chain.back().empty()) {
        RatPoly rem = poly_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : rem) c = -c;
        chain.push_back(trim(rem));
    }
    chain.pop_back();
    std::vector<int> at_minf, at_pinf;
    for (const auto& q : chain) {
        at_minf.push_back(sign_at_infinity(q, -1));
        at_pinf.push_back(sign_at_infinity(q, +1));
    }
    r.distinct_real_roots = sign_changes(at_minf) - sign_changes(at_pinf);
    r.real_rooted = r.distinct_real_roots == r.degree;
    return r;
}

}  // namespace mtcomb
