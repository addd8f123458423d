#include "mtcomb/stats.hpp"

#include <algorithm>
#include <thread>

#include "mtcomb/enumerate.hpp"
#include "mtcomb/errors.hpp"
#include "mtcomb/interlace.hpp"
#include "mtcomb/weak_dag.hpp"

namespace mtcomb {

static std::uint64_t descent_bits(int n, const std::uint64_t* rows) {
    std::uint64_t des = 0;
    for (int k = 1; k <= n - 1; ++k) {
        Subset low = h_min(Subset(n, rows[k - 1]), Subset(n, rows[k + 1]));
        if (low.bits != rows[k]) des |= std::uint64_t{1} << (k - 1);
    }
    return des;
}

// DFS over rows 2..n with row 1 fixed; rows[0] = 0 already.
static void sweep_from_row1(int n, std::uint64_t row1, std::vector<Int>& hist) {
    SuccessorTable succ(n);
    std::vector<std::uint64_t> rows(n + 1, 0);
    rows[1] = row1;
    if (n == 1) {
        rows[1] = 1;  // the unique row is {1}
        ++hist[0];
        return;
    }
    std::vector<std::size_t> pos(n + 1, 0);
    int depth = 2;
    while (depth >= 2) {
        const auto& s = succ.successors(rows[depth - 1]);
        if (pos[depth] == s.size()) {
            pos[depth] = 0;
            --depth;
            if (depth >= 2) ++pos[depth];
            continue;
        }
        rows[depth] = s[pos[depth]];
        if (depth == n) {
            ++hist[descent_bits(n, rows.data())];
            ++pos[depth];
        } else {
            ++depth;
        }
    }
}

FlagVector descent_distribution(int n, int jobs, int max_n) {
    if (n < 1 || n > max_n)
        throw ResourceGuardError("descent_distribution: n=" + std::to_string(n) +
                                 " exceeds configured maximum " + std::to_string(max_n));
    FlagVector out;
    out.n = n;
    out.kind = FlagKind::FlagH;
    out.values.assign(std::size_t{1} << (n - 1), 0);
    jobs = std::clamp(jobs, 1, std::max(1, n));
    if (jobs == 1) {
        enumerate_mt_rows(n, [&](const std::uint64_t* rows) {
            ++out.values[descent_bits(n, rows)];
        }, max_n);
        return out;
    }
    std::vector<std::vector<Int>> partial(jobs,
                                          std::vector<Int>(out.values.size(), 0));
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t)
        threads.emplace_back([&, t] {
            for (int j = t; j < n; j += jobs)
                sweep_from_row1(n, std::uint64_t{1} << j, partial[t]);
        });
    for (auto& th : threads) th.join();
    for (const auto& h : partial)
        for (std::size_t b = 0; b < h.size(); ++b) out.values[b] += h[b];
    return out;
}

Int flag_f_direct(int n, const Subset& J) {
    if (J.n != n - 1) throw std::invalid_argument("flag_f_direct: J must live in [n-1]");
    auto ranks = J.elements();
    if (ranks.empty()) return 1;

    // Subsets of [n] at each requested rank, in bit order.
    auto level = [&](int r) {
        std::vector<std::uint64_t> out;
        std::uint64_t limit = std::uint64_t{1} << n;
        std::uint64_t v = (std::uint64_t{1} << r) - 1;
        while (v < limit) {
            out.push_back(v);
            std::uint64_t c = v & -v, rr = v + c;
            v = (((rr ^ v) >> 2) / c) | rr;
        }
        return out;
    };
    std::vector<std::uint64_t> cur = level(ranks[0]);
    std::vector<Int> count(cur.size(), 1);
    for (std::size_t m = 1; m < ranks.size(); ++m) {
        std::vector<std::uint64_t> next = level(ranks[m]);
        std::vector<Int> nc(next.size(), 0);
        for (std::size_t b = 0; b < next.size(); ++b) {
            Subset upper(n, next[b]);
            for (std::size_t a = 0; a < cur.size(); ++a)
                if (count[a] != 0 && leq_lace(Subset(n, cur[a]), upper))
                    nc[b] += count[a];
        }
        cur = std::move(next);
        count = std::move(nc);
    }
    Int total = 0;
    for (const Int& c : count) total += c;
    return total;
}

FlagVector flag_f_all(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw ResourceGuardError("flag_f_all: n exceeds configured maximum");
    FlagVector out;
    out.n = n;
    out.kind = FlagKind::FlagF;
    std::size_t size = std::size_t{1} << (n - 1);
    out.values.resize(size);
    for (std::size_t b = 0; b < size; ++b)
        out.values[b] = flag_f_direct(n, Subset(n - 1, b));
    return out;
}

FlagVector flag_h_from_f(const FlagVector& flag_f) {
    FlagVector out = flag_f;
    out.kind = FlagKind::FlagH;
    // Signed subset-sum (Moebius) transform, one bit at a time.
    std::size_t size = out.values.size();
    for (int bit = 0; std::size_t{1} << bit < size; ++bit)
        for (std::size_t b = 0; b < size; ++b)
            if (b >> bit & 1) out.values[b] -= out.values[b ^ (std::size_t{1} << bit)];
    return out;
}

IntPolynomial h_vector(int n, int jobs, int max_n) {
    FlagVector h = descent_distribution(n, jobs, max_n);
    IntPolynomial p;
    p.coeffs.assign(n, 0);
    for (std::size_t b = 0; b < h.values.size(); ++b)
        p.coeffs[__builtin_popcountll(b)] += h.values[b];
    p.normalize();
    return p;
}

std::vector<Int> f_vector(int n, int max_n) {
    FlagVector f = flag_f_all(n, max_n);
    std::vector<Int> out(n, 0);
    for (std::size_t b = 0; b < f.values.size(); ++b)
        out[__builtin_popcountll(b)] += f.values[b];
    return out;
}

Int maximal_element_count(int n, int max_n) {
    WeakOrderDag dag(n, max_n, /*build_closure=*/false);
    std::vector<char> has_strict_incoming(dag.size(), 0);
    for (std::size_t id = 0; id < dag.size(); ++id)
        for (int i = 1; i <= n - 1; ++i) {
            std::size_t to = dag.edge_target(id, i);
            if (to != id) has_strict_incoming[to] = 1;
        }
    Int count = 0;
    for (char c : has_strict_incoming)
        if (!c) ++count;
    return count;
}

int h_argmax(const IntPolynomial& h) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(h.coeffs.size()); ++i)
        if (h.coeffs[i] > h.coeffs[best]) best = i;
    return best;
}

}  // namespace mtcomb
