#include "mtcomb/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtcomb {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::degree() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

Composition alpha_of_set(const Subset& J, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int j : J.elements()) {
        if (j >= n) throw std::invalid_argument("alpha_of_set: J must lie in [n-1]");
        parts.push_back(j - prev);
        prev = j;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::pair<Subset, int> set_of_alpha(const Composition& alpha) {
    int n = alpha.degree();
    Subset J = Subset::empty(std::max(0, n - 1));
    int sum = 0;
    for (std::size_t i = 0; i + 1 < alpha.parts.size(); ++i) {
        sum += alpha.parts[i];
        J.bits |= std::uint64_t{1} << (sum - 1);
    }
    return {J, n};
}

void QSymElement::add(const Composition& alpha, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(alpha);
    if (it == terms.end()) {
        terms.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

int QSymElement::degree() const {
    return terms.empty() ? 0 : terms.begin()->first.degree();
}

std::string QSymElement::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    const char* base = basis == QSymBasis::M ? "M" : "L";
    bool first = true;
    for (const auto& [alpha, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << base << alpha.to_string();
    }
    return os.str();
}

static void check_homogeneous(const QSymElement& x) {
    int d = x.degree();
    for (const auto& [alpha, c] : x.terms)
        if (alpha.degree() != d)
            throw std::invalid_argument("QSym operation requires a homogeneous element");
}

QSymElement l_to_m(const QSymElement& x) {
    if (x.basis != QSymBasis::L) throw std::invalid_argument("l_to_m: expected L basis");
    check_homogeneous(x);
    QSymElement out;
    out.basis = QSymBasis::M;
    for (const auto& [alpha, c] : x.terms) {
        auto [S, n] = set_of_alpha(alpha);
        // Refinements of alpha correspond to supersets of its partial-sum set.
        std::uint64_t rest = Subset::full(S.n).bits & ~S.bits;
        std::uint64_t extra = rest;
        while (true) {
            out.add(alpha_of_set(Subset(S.n, S.bits | extra), n), c);
            if (extra == 0) break;
            extra = (extra - 1) & rest;
        }
    }
    return out;
}

QSymElement m_to_l(const QSymElement& x) {
    if (x.basis != QSymBasis::M) throw std::invalid_argument("m_to_l: expected M basis");
    check_homogeneous(x);
    QSymElement out;
    out.basis = QSymBasis::L;
    for (const auto& [alpha, c] : x.terms) {
        auto [S, n] = set_of_alpha(alpha);
        std::uint64_t rest = Subset::full(S.n).bits & ~S.bits;
        std::uint64_t extra = rest;
        while (true) {
            int sign = __builtin_popcountll(extra) % 2 ? -1 : 1;
            out.add(alpha_of_set(Subset(S.n, S.bits | extra), n), sign * c);
            if (extra == 0) break;
            extra = (extra - 1) & rest;
        }
    }
    return out;
}

// Sparse polynomial in a fixed number of variables, exponent-vector keyed.
using Poly = std::map<std::vector<int>, Int>;

static Poly expand_m(const Composition& alpha, int vars, const Int& coeff) {
    Poly p;
    int k = static_cast<int>(alpha.parts.size());
    if (k > vars) return p;
    std::vector<int> pick(k);
    // All strictly increasing position sequences of length k in [0, vars).
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<int> expo(vars, 0);
        for (int i = 0; i < k; ++i) expo[pick[i]] = alpha.parts[i];
        p[std::move(expo)] += coeff;
        int i = k - 1;
        while (i >= 0 && pick[i] == vars - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return p;
}

QSymElement m_product(const QSymElement& x, const QSymElement& y) {
    if (x.basis != QSymBasis::M || y.basis != QSymBasis::M)
        throw std::invalid_argument("m_product: expected M basis");
    check_homogeneous(x);
    check_homogeneous(y);
    QSymElement out;
    out.basis = QSymBasis::M;
    if (x.is_zero() || y.is_zero()) return out;
    int vars = x.degree() + y.degree();
    if (vars == 0) {
        // Both are multiples of the empty composition (the unit).
        out.add(Composition(), x.terms.begin()->second * y.terms.begin()->second);
        return out;
    }
    Poly px, py;
    for (const auto& [alpha, c] : x.terms)
        for (auto& [e, v] : expand_m(alpha, vars, c)) px[e] += v;
    for (const auto& [alpha, c] : y.terms)
        for (auto& [e, v] : expand_m(alpha, vars, c)) py[e] += v;
    Poly prod;
    for (const auto& [ea, ca] : px)
        for (const auto& [eb, cb] : py) {
            std::vector<int> e(vars);
            for (int i = 0; i < vars; ++i) e[i] = ea[i] + eb[i];
            prod[std::move(e)] += ca * cb;
        }
    // Coefficient of M_beta = coefficient of the packed monomial
    // x_1^{beta_1} ... x_k^{beta_k}.
    for (const auto& [e, c] : prod) {
        if (c == 0) continue;
        std::vector<int> parts;
        bool packed = true;
        for (int i = 0; i < vars; ++i) {
            if (e[i] == 0) {
                for (int j = i; j < vars; ++j)
                    if (e[j] != 0) packed = false;
                break;
            }
            parts.push_back(e[i]);
        }
        if (packed) out.add(Composition(std::move(parts)), c);
    }
    return out;
}

static void quasishuffle_rec(const std::vector<int>& a, std::size_t i,
                             const std::vector<int>& b, std::size_t j,
                             std::vector<int>& cur, const Int& coeff, QSymElement& out) {
    if (i == a.size() && j == b.size()) {
        out.add(Composition(cur), coeff);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        quasishuffle_rec(a, i + 1, b, j, cur, coeff, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        quasishuffle_rec(a, i, b, j + 1, cur, coeff, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        quasishuffle_rec(a, i + 1, b, j + 1, cur, coeff, out);
        cur.pop_back();
    }
}

QSymElement m_product_quasishuffle(const QSymElement& x, const QSymElement& y) {
    if (x.basis != QSymBasis::M || y.basis != QSymBasis::M)
        throw std::invalid_argument("m_product_quasishuffle: expected M basis");
    check_homogeneous(x);
    check_homogeneous(y);
    QSymElement out;
    out.basis = QSymBasis::M;
    std::vector<int> cur;
    for (const auto& [alpha, ca] : x.terms)
        for (const auto& [beta, cb] : y.terms)
            quasishuffle_rec(alpha.parts, 0, beta.parts, 0, cur, ca * cb, out);
    return out;
}

QSymElement l_product(const QSymElement& x, const QSymElement& y) {
    if (x.basis != QSymBasis::L || y.basis != QSymBasis::L)
        throw std::invalid_argument("l_product: expected L basis");
    return m_to_l(m_product(l_to_m(x), l_to_m(y)));
}

bool is_symmetric(const QSymElement& x) {
    if (x.basis != QSymBasis::M)
        throw std::invalid_argument("is_symmetric: expected M basis");
    check_homogeneous(x);
    // Group by sorted parts; coefficients must agree and every rearrangement
    // of a present class must be present.
    std::map<std::vector<int>, Int> classes;
    std::map<std::vector<int>, std::size_t> seen;
    for (const auto& [alpha, c] : x.terms) {
        std::vector<int> key = alpha.parts;
        std::sort(key.begin(), key.end());
        auto it = classes.find(key);
        if (it == classes.end()) {
            classes.emplace(key, c);
        } else if (it->second != c) {
            return false;
        }
        ++seen[key];
    }
    for (const auto& [key, count] : seen) {
        // Number of distinct rearrangements of key.
        std::vector<int> perm = key;
        std::size_t total = 0;
        do ++total;
        while (std::next_permutation(perm.begin(), perm.end()));
        if (count != total) return false;
    }
    return true;
}

}  // namespace mtcomb
