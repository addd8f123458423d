#include "mtcomb/topology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mtcomb/errors.hpp"
#include "mtcomb/hecke.hpp"

namespace mtcomb {

static void require_closure(const WeakOrderDag& dag) {
    if (!dag.has_closure())
        throw std::invalid_argument("operation requires a DAG built with its closure");
}

// Moebius row for fixed x: node ids are a linear extension of <_W, so a
// single ascending sweep suffices.  Only nonzero values are carried.
static std::vector<std::pair<std::size_t, Int>> mobius_row(const WeakOrderDag& dag,
                                                           std::size_t x) {
    std::vector<std::pair<std::size_t, Int>> nonzero;
    nonzero.reserve(64);
    for (std::size_t y = x; y < dag.size(); ++y) {
        if (!dag.weak_leq(x, y)) continue;
        Int mu;
        if (y == x) {
            mu = 1;
        } else {
            mu = 0;
            const NodeSet& below = dag.closure(y);
            for (const auto& [z, v] : nonzero)
                if (z != y && below.test(z)) mu -= v;
        }
        if (mu != 0) nonzero.emplace_back(y, mu);
    }
    return nonzero;
}

MobiusTable::MobiusTable(const WeakOrderDag& dag) : dag_(dag) {
    require_closure(dag);
    memo_.resize(dag.size());
    filled_.assign(dag.size(), 0);
}

Int MobiusTable::mu(std::size_t x, std::size_t y) const {
    if (!dag_.weak_leq(x, y))
        throw std::invalid_argument("mobius: pair is not comparable");
    if (!filled_[x]) {
        std::vector<Int> row(dag_.size(), 0);
        for (const auto& [z, v] : mobius_row(dag_, x)) row[z] = v;
        memo_[x] = std::move(row);
        filled_[x] = 1;
    }
    return memo_[x][y];
}

ConjecturePrediction conjecture_prediction(const WeakOrderDag& dag, std::size_t lower,
                                           std::size_t upper) {
    require_closure(dag);
    if (!dag.weak_leq(lower, upper))
        throw std::invalid_argument("conjecture_prediction: pair is not comparable");
    int n = dag.n();
    const MonotoneTriangle& lo = dag.node(lower);
    const MonotoneTriangle& hi = dag.node(upper);
    Subset J = Subset::empty(n - 1);
    for (int m = 1; m <= n - 1; ++m)
        if (!(lo.rows[m] == hi.rows[m])) J.bits |= std::uint64_t{1} << (m - 1);
    ConjecturePrediction out{Int(0), J, false};
    const DescentSet& des = dag.descents(upper);
    if ((J.bits & ~des.bits) == 0 && pi_parabolic_min(hi, J) == lo) {
        out.sphere = true;
        out.value = J.cardinality() % 2 ? -1 : 1;
    }
    return out;
}

ConjectureReport verify_conjecture(const WeakOrderDag& dag) {
    require_closure(dag);
    ConjectureReport report;
    for (std::size_t x = 0; x < dag.size(); ++x) {
        auto row = mobius_row(dag, x);
        std::size_t nz = 0;
        for (std::size_t y = x; y < dag.size(); ++y) {
            if (!dag.weak_leq(x, y)) continue;
            ++report.pairs;
            Int mu = 0;
            if (nz < row.size() && row[nz].first == y) mu = row[nz++].second;
            if (conjecture_prediction(dag, x, y).value == mu)
                ++report.agreements;
            else
                report.discrepancies.emplace_back(x, y);
        }
    }
    return report;
}

IntervalComplex interval_complex(const WeakOrderDag& dag, std::size_t lower,
                                 std::size_t upper, std::size_t max_proper) {
    require_closure(dag);
    if (!dag.weak_leq(lower, upper))
        throw std::invalid_argument("interval_complex: pair is not comparable");
    IntervalComplex cx;
    for (std::size_t z = lower + 1; z < upper; ++z)
        if (z != lower && z != upper && dag.weak_leq(lower, z) && dag.weak_leq(z, upper))
            cx.proper.push_back(z);
    std::size_t p = cx.proper.size();
    if (p > max_proper)
        throw ResourceGuardError("interval_complex: " + std::to_string(p) +
                                 " proper elements exceeds bound " +
                                 std::to_string(max_proper));
    // Chains = subsets whose elements are pairwise comparable; proper is in
    // ascending id order, which refines <_W.
    std::vector<std::uint32_t> comparable(p, 0);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
            if (dag.weak_leq(cx.proper[i], cx.proper[j]))
                comparable[i] |= std::uint32_t{1} << j;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p); ++mask) {
        bool chain = true;
        for (std::uint32_t m = mask; m && chain; m &= m - 1) {
            std::size_t i = __builtin_ctz(m);
            std::uint32_t rest = mask & ~((std::uint32_t{2} << i) - 1);
            if ((rest & comparable[i]) != rest) chain = false;
        }
        if (!chain) continue;
        int dim = __builtin_popcount(mask) - 1;
        if (dim >= static_cast<int>(cx.faces_by_dim.size()))
            cx.faces_by_dim.resize(dim + 1);
        cx.faces_by_dim[dim].push_back(static_cast<int>(mask));
        cx.dimension = std::max(cx.dimension, dim);
    }
    return cx;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
static int integer_rank(std::vector<std::vector<Int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] != 0 && (piv == rows || abs(m[r][col]) < abs(m[piv][col])))
                piv = r;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<Int> betti_numbers(const IntervalComplex& cx) {
    int dim = cx.dimension;
    std::vector<Int> betti(std::max(0, dim + 1), 0);
    if (dim < 0) return betti;  // empty complex: reduced homology sits in degree -1

    // boundary_rank[d] = rank of the boundary map C_d -> C_{d-1}, with C_{-1}
    // the augmentation target Z.
    std::vector<int> boundary_rank(dim + 2, 0);
    boundary_rank[0] = 1;  // augmentation is onto once there is a vertex
    for (int d = 1; d <= dim; ++d) {
        const auto& lowfaces = cx.faces_by_dim[d - 1];
        const auto& highfaces = cx.faces_by_dim[d];
        std::map<int, std::size_t> lowindex;
        for (std::size_t i = 0; i < lowfaces.size(); ++i) lowindex[lowfaces[i]] = i;
        std::vector<std::vector<Int>> mat(lowfaces.size(),
                                          std::vector<Int>(highfaces.size(), 0));
        for (std::size_t c = 0; c < highfaces.size(); ++c) {
            int mask = highfaces[c], k = 0;
            for (int m = mask; m; m &= m - 1, ++k) {
                int vertex = m & -m;
                mat[lowindex.at(mask ^ vertex)][c] = k % 2 ? -1 : 1;
            }
        }
        boundary_rank[d] = integer_rank(std::move(mat));
    }
    for (int d = 0; d <= dim; ++d) {
        Int cycles = Int(cx.faces_by_dim[d].size()) - boundary_rank[d];
        betti[d] = cycles - boundary_rank[d + 1];
    }
    return betti;
}

StructureReport structure_checks(const WeakOrderDag& dag, std::size_t lower,
                                 std::size_t upper) {
    require_closure(dag);
    if (!dag.weak_leq(lower, upper))
        throw std::invalid_argument("structure_checks: pair is not comparable");
    StructureReport report;
    std::vector<std::size_t> elems;
    for (std::size_t z = lower; z <= upper; ++z)
        if (dag.weak_leq(lower, z) && dag.weak_leq(z, upper)) elems.push_back(z);
    std::size_t k = elems.size();

    auto leq = [&](std::size_t a, std::size_t b) { return dag.weak_leq(elems[a], elems[b]); };

    // Joins and meets: every pair must have a unique minimal upper bound and
    // a unique maximal lower bound inside the interval.
    for (std::size_t a = 0; a < k && report.is_lattice; ++a)
        for (std::size_t b = a + 1; b < k && report.is_lattice; ++b) {
            for (int side = 0; side < 2; ++side) {
                std::vector<std::size_t> bounds;
                for (std::size_t c = 0; c < k; ++c) {
                    bool ok = side == 0 ? (leq(a, c) && leq(b, c))
                                        : (leq(c, a) && leq(c, b));
                    if (ok) bounds.push_back(c);
                }
                std::vector<std::size_t> extremal;
                for (std::size_t c : bounds) {
                    bool ext = true;
                    for (std::size_t d : bounds)
                        if (d != c && (side == 0 ? leq(d, c) : leq(c, d))) ext = false;
                    if (ext) extremal.push_back(c);
                }
                if (extremal.size() != 1) {
                    report.is_lattice = false;
                    report.join_failure = {elems[a], elems[b]};
                    for (std::size_t c : extremal)
                        report.minimal_upper_bounds.push_back(elems[c]);
                    break;
                }
            }
        }

    // Cover relation inside the interval, then longest/shortest maximal chain
    // from lower to upper by DP over the id order (a linear extension).
    std::vector<std::vector<std::size_t>> covers(k);  // covers[b]: a with elems[a] covered-by elems[b]
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t a = 0; a < b; ++a) {
            if (!leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c = a + 1; c < b && cover; ++c)
                if (leq(a, c) && leq(c, b)) cover = false;
            if (cover) covers[b].push_back(a);
        }
    std::vector<int> longest(k, -1), shortest(k, -1);
    longest[0] = shortest[0] = 0;  // elems[0] == lower
    for (std::size_t b = 1; b < k; ++b)
        for (std::size_t a : covers[b]) {
            if (longest[a] >= 0)
                longest[b] = std::max(longest[b], longest[a] + 1);
            if (shortest[a] >= 0)
                shortest[b] = shortest[b] < 0 ? shortest[a] + 1
                                              : std::min(shortest[b], shortest[a] + 1);
        }
    report.max_maximal_chain = k ? longest[k - 1] : 0;
    report.min_maximal_chain = k ? shortest[k - 1] : 0;
    report.is_ranked = report.max_maximal_chain == report.min_maximal_chain;
    return report;
}

}  // namespace mtcomb
