#include "mtcomb/asm_algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

#include "mtcomb/enumerate.hpp"
#include "mtcomb/hecke.hpp"

namespace mtcomb {

void AsmCombination::add(const AsmMatrix& A, const Int& c) {
    if (c == 0) return;
    if (terms.empty()) n = A.n;
    if (A.n != n) throw std::invalid_argument("AsmCombination: mixed sizes");
    auto it = terms.find(A);
    if (it == terms.end()) {
        terms.emplace(A, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::vector<Permutation> shuffles(const Permutation& u, const Permutation& v) {
    int a = u.size(), b = v.size();
    std::vector<Permutation> out;
    // Positions of the u-letters, as a-subsets of [a+b] via Gosper's hack.
    std::uint64_t limit = std::uint64_t{1} << (a + b);
    std::uint64_t s = a == 0 ? 0 : (std::uint64_t{1} << a) - 1;
    do {
        std::vector<int> w(a + b);
        int iu = 1, iv = 1;
        for (int pos = 0; pos < a + b; ++pos)
            w[pos] = (s >> pos & 1) ? u[iu++] : v[iv++] + a;
        out.push_back(Permutation(std::move(w)));
        if (a == 0) break;
        std::uint64_t c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    } while (s < limit);
    return out;
}

AsmCombination asm_product(const AsmMatrix& A, const AsmMatrix& B) {
    int a = A.n, b = B.n;
    AsmCombination out;
    std::uint64_t limit = std::uint64_t{1} << (a + b);
    std::uint64_t s = a == 0 ? 0 : (std::uint64_t{1} << a) - 1;
    do {
        std::vector<std::vector<int>> rows(a + b, std::vector<int>(a + b, 0));
        int ia = 0, ib = 0;
        for (int pos = 0; pos < a + b; ++pos) {
            if (s >> pos & 1) {
                for (int j = 0; j < a; ++j) rows[pos][j] = A.entries[ia][j];
                ++ia;
            } else {
                for (int j = 0; j < b; ++j) rows[pos][a + j] = B.entries[ib][j];
                ++ib;
            }
        }
        out.add(AsmMatrix(std::move(rows)), 1);  // ctor validates the ASM
        if (a == 0) break;
        std::uint64_t c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    } while (s < limit);
    return out;
}

MonotoneTriangle asm_product_triangle(const MonotoneTriangle& TA,
                                      const MonotoneTriangle& TB, const Subset& S) {
    int a = TA.n, b = TB.n, n = a + b;
    if (S.n != n || S.cardinality() != a)
        throw std::invalid_argument("asm_product_triangle: S must be an a-subset of [a+b]");
    std::vector<Subset> rows;
    rows.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        int i = 0;
        for (int p = 1; p <= k; ++p)
            if (S.contains(p)) ++i;
        int j = k - i;
        // T(A)_i in the low a positions, T(B)_j shifted up by a.
        std::uint64_t bits = TA.rows[i].bits | (TB.rows[j].bits << a);
        rows.push_back(Subset(n, bits));
    }
    return MonotoneTriangle(std::move(rows));
}

QSymElement phi_asm(const AsmMatrix& A) {
    QSymElement out;
    out.basis = QSymBasis::L;
    DescentSet des = descent_set(asm_to_mt(A));
    out.add(alpha_of_set(des, A.n), 1);
    return out;
}

QSymElement phi_asm(const AsmCombination& x) {
    QSymElement out;
    out.basis = QSymBasis::L;
    for (const auto& [A, c] : x.terms) {
        DescentSet des = descent_set(asm_to_mt(A));
        out.add(alpha_of_set(des, A.n), c);
    }
    return out;
}

std::vector<AsmMatrix> all_asm(int n, int max_n) {
    std::vector<AsmMatrix> out;
    enumerate_mt(n, [&](const MonotoneTriangle& t) { out.push_back(mt_to_asm(t)); },
                 max_n);
    return out;
}

MorphismReport verify_morphism(int a, int b, int max_sum, int jobs) {
    MorphismReport report;
    if (a < 1 || b < 1 || a + b > max_sum)
        throw std::invalid_argument("verify_morphism: sizes out of range");
    auto as = all_asm(a), bs = all_asm(b);

    auto check_pair = [&](std::size_t i, std::size_t j) {
        QSymElement lhs = phi_asm(asm_product(as[i], bs[j]));
        QSymElement rhs = l_product(phi_asm(as[i]), phi_asm(bs[j]));
        return lhs == rhs;
    };
    std::size_t total = as.size() * bs.size();
    jobs = std::max(1, jobs);
    std::vector<std::size_t> first_bad(jobs, total);
    auto scan = [&](int t) {
        for (std::size_t k = t; k < total; k += static_cast<std::size_t>(jobs))
            if (!check_pair(k / bs.size(), k % bs.size())) {
                first_bad[t] = k;
                return;
            }
    };
    if (jobs == 1) {
        scan(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(scan, t);
        for (auto& th : threads) th.join();
    }
    std::size_t bad = total;
    for (std::size_t k : first_bad) bad = std::min(bad, k);
    if (bad < total) {
        report.pass = false;
        std::size_t i = bad / bs.size(), j = bad % bs.size();
        report.counterexample = {i, j};
        std::ostringstream os;
        os << "phi(A*B) != phi(A)*phi(B) for A = ASM_" << a << "[" << i << "], B = ASM_"
           << b << "[" << j << "]";
        report.detail = os.str();
    }
    return report;
}

QSymElement phi_sum_m(int n, const std::function<bool(const AsmMatrix&)>& pred,
                      int max_n) {
    QSymElement sum;
    sum.basis = QSymBasis::L;
    enumerate_mt(
        n,
        [&](const MonotoneTriangle& t) {
            AsmMatrix A = mt_to_asm(t);
            if (pred(A)) sum.add(alpha_of_set(descent_set(t), n), 1);
        },
        max_n);
    return l_to_m(sum);
}

}  // namespace mtcomb
