#include "mtcomb/phi_poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "mtcomb/altvec.hpp"
#include "mtcomb/enumerate.hpp"
#include "mtcomb/errors.hpp"

namespace mtcomb {

static void chains_rec(const Subset& cur, const Subset& J, SuccessorTable& succ,
                       std::vector<Subset>& stack, std::vector<MonotoneTrapezoid>& out) {
    if (cur == J) {
        out.push_back(MonotoneTrapezoid{stack});
        return;
    }
    for (std::uint64_t h : succ.successors(cur.bits)) {
        Subset H(cur.n, h);
        if (!leq_lace(H, J)) continue;
        stack.push_back(H);
        chains_rec(H, J, succ, stack, out);
        stack.pop_back();
    }
}

std::vector<MonotoneTrapezoid> maximal_chains(const Subset& I, const Subset& J) {
    if (I.n != J.n)
        throw std::invalid_argument("maximal_chains: ground-size mismatch");
    std::vector<MonotoneTrapezoid> out;
    if (!leq_lace(I, J)) return out;
    SuccessorTable succ(I.n);
    std::vector<Subset> stack{I};
    chains_rec(I, J, succ, stack, out);
    return out;
}

std::uint64_t el_label(const Subset& lower, const Subset& upper) {
    return alt_to_subset(indicator_diff(lower, upper)).bits;
}

std::vector<std::uint64_t> chain_labels(const MonotoneTrapezoid& chain) {
    std::vector<std::uint64_t> labels;
    labels.reserve(chain.rows.size() - 1);
    for (std::size_t m = 1; m < chain.rows.size(); ++m)
        labels.push_back(el_label(chain.rows[m - 1], chain.rows[m]));
    return labels;
}

static bool weakly_rising(const std::vector<std::uint64_t>& labels) {
    for (std::size_t m = 1; m < labels.size(); ++m)
        if (labels[m - 1] & ~labels[m]) return false;  // S_{m-1} not a subset of S_m
    return true;
}

ElReport verify_el_labeling(int n, int max_n) {
    if (n < 0 || n > max_n)
        throw ResourceGuardError("verify_el_labeling: n exceeds maximum");
    ElReport report;
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t ib = 0; ib < limit; ++ib) {
        for (std::uint64_t jb = 0; jb < limit; ++jb) {
            Subset I(n, ib), J(n, jb);
            if (I == J || !leq_lace(I, J)) continue;
            auto chains = maximal_chains(I, J);
            const MonotoneTrapezoid* rising = nullptr;
            int rising_count = 0;
            for (const auto& c : chains)
                if (weakly_rising(chain_labels(c))) {
                    rising = &c;
                    ++rising_count;
                }
            auto fail = [&](const std::string& what) {
                report.pass = false;
                std::ostringstream os;
                os << "interval [" << I.to_string() << ", " << J.to_string() << "]: " << what;
                report.detail = os.str();
            };
            if (rising_count != 1)
                return fail("expected exactly one rising chain, found " +
                            std::to_string(rising_count)),
                       report;
            if (!(*rising == minimal_trapezoid(I, J)))
                return fail("rising chain is not the minimal trapezoid"), report;
            if (J.cardinality() > I.cardinality() + 1) {
                // First rising label must be strictly EL-below every other
                // first step out of I within the interval.
                std::uint64_t first = el_label(rising->rows[0], rising->rows[1]);
                for (const auto& c : chains) {
                    if (c.rows[1] == rising->rows[1]) continue;
                    std::uint64_t other = el_label(c.rows[0], c.rows[1]);
                    if (!((first & ~other) == 0 && first != other))
                        return fail("first rising label not strictly minimal"), report;
                }
            }
        }
    }
    return report;
}

std::vector<MonotoneTriangle> el_lex_order(int n, int max_n) {
    auto triangles = all_mt(n, max_n);
    std::vector<std::vector<std::uint64_t>> labels(triangles.size());
    for (std::size_t i = 0; i < triangles.size(); ++i)
        labels[i] = chain_labels(MonotoneTrapezoid{triangles[i].rows});
    std::vector<std::size_t> order(triangles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return labels[a] != labels[b] ? labels[a] < labels[b] : a < b;
    });
    std::vector<MonotoneTriangle> out;
    out.reserve(order.size());
    for (std::size_t i : order) out.push_back(triangles[i]);
    return out;
}

ShellingReport verify_shelling(const std::vector<MonotoneTriangle>& facet_order, int jobs) {
    ShellingReport report;
    if (facet_order.empty()) return report;
    int n = facet_order.front().n;

    // Must be a permutation of MT_n.
    std::map<std::vector<std::uint64_t>, std::size_t> pos;
    for (std::size_t j = 0; j < facet_order.size(); ++j) {
        if (facet_order[j].n != n)
            throw std::invalid_argument("verify_shelling: mixed triangle sizes");
        if (!pos.emplace(facet_order[j].key(), j).second)
            throw std::invalid_argument("verify_shelling: duplicate facet");
    }
    {
        std::size_t count = 0;
        enumerate_mt_rows(n, [&](const std::uint64_t*) { ++count; });
        if (count != facet_order.size())
            throw std::invalid_argument("verify_shelling: order is not all of MT_n");
    }
    if (facet_order.size() < 2) return report;

    // witness_rows[j]: rows m such that some earlier facet differs from F_j
    // in exactly row m.
    SuccessorTable succ(n);
    std::vector<std::uint64_t> witness_rows(facet_order.size(), 0);
    for (std::size_t j = 0; j < facet_order.size(); ++j) {
        const auto& F = facet_order[j];
        std::vector<std::uint64_t> key = F.key();
        for (int m = 1; m <= n - 1; ++m) {
            for (std::uint64_t h : succ.successors(F.rows[m - 1].bits)) {
                if (h == F.rows[m].bits) continue;
                if (!leq_lace(Subset(n, h), F.rows[m + 1])) continue;
                std::vector<std::uint64_t> k2 = key;
                k2[m - 1] = h;
                auto it = pos.find(k2);
                if (it != pos.end() && it->second < j)
                    witness_rows[j] |= std::uint64_t{1} << (m - 1);
            }
        }
    }

    // For each i<j: need a row where F_i differs from F_j that has a witness.
    std::vector<std::vector<std::uint64_t>> keys(facet_order.size());
    for (std::size_t j = 0; j < facet_order.size(); ++j) keys[j] = facet_order[j].key();

    auto scan = [&](std::size_t jlo, std::size_t jhi,
                    std::optional<std::pair<std::size_t, std::size_t>>& firstfail) {
        for (std::size_t j = jlo; j < jhi; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                std::uint64_t diff = 0;
                for (int m = 0; m < n - 1; ++m)
                    if (keys[i][m] != keys[j][m]) diff |= std::uint64_t{1} << m;
                if ((diff & witness_rows[j]) == 0) {
                    if (!firstfail || std::make_pair(j, i) <
                                          std::make_pair(firstfail->second, firstfail->first))
                        firstfail = {i, j};
                    return;
                }
            }
        }
    };

    jobs = std::max(1, jobs);
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> fails(jobs);
    if (jobs == 1) {
        scan(1, facet_order.size(), fails[0]);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (facet_order.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::size_t lo = std::max<std::size_t>(1, t * chunk);
            std::size_t hi = std::min(facet_order.size(), (t + 1) * chunk);
            if (lo >= hi) continue;
            threads.emplace_back([&, lo, hi, t] { scan(lo, hi, fails[t]); });
        }
        for (auto& th : threads) th.join();
    }
    // Deterministic merge: smallest failing j, then smallest i.
    for (const auto& f : fails) {
        if (!f) continue;
        auto fk = std::make_pair(f->second, f->first);
        if (!report.witness_failure ||
            fk < std::make_pair(report.witness_failure->second, report.witness_failure->first))
            report.witness_failure = f;
    }
    report.pass = !report.witness_failure.has_value();
    return report;
}

}  // namespace mtcomb
