#include "mtcomb/enumerate.hpp"

#include "mtcomb/errors.hpp"
#include "mtcomb/interlace.hpp"

namespace mtcomb {

const std::vector<std::uint64_t>& SuccessorTable::successors(std::uint64_t bits) {
    auto it = cache_.find(bits);
    if (it != cache_.end()) return it->second;

    Subset I(n_, bits);
    int m = I.cardinality();
    std::vector<std::uint64_t> out;
    if (m < n_) {
        // Gosper's hack over all (m+1)-subsets of [n], ascending.
        std::uint64_t limit = n_ == 64 ? 0 : (std::uint64_t{1} << n_);
        std::uint64_t v = (std::uint64_t{1} << (m + 1)) - 1;
        while (v < limit) {
            if (leq_lace(I, Subset(n_, v))) out.push_back(v);
            std::uint64_t c = v & -v, r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
        }
    }
    return cache_.emplace(bits, std::move(out)).first->second;
}

void enumerate_mt_rows(int n, const std::function<void(const std::uint64_t*)>& emit,
                       int max_n) {
    if (n < 0 || n > max_n)
        throw ResourceGuardError("enumerate_mt: n=" + std::to_string(n) +
                                 " exceeds configured maximum " + std::to_string(max_n));
    std::vector<std::uint64_t> rows(n + 1, 0);
    if (n == 0) {
        emit(rows.data());
        return;
    }
    SuccessorTable succ(n);
    // Depth-first over rows 1..n; successor lists are ascending, so leaves
    // appear in canonical (row-lexicographic) order.
    std::vector<std::size_t> pos(n + 1, 0);
    int depth = 1;
    while (depth >= 1) {
        const auto& s = succ.successors(rows[depth - 1]);
        if (pos[depth] == s.size()) {
            pos[depth] = 0;
            --depth;
            if (depth >= 1) ++pos[depth];
            continue;
        }
        rows[depth] = s[pos[depth]];
        if (depth == n) {
            emit(rows.data());
            ++pos[depth];
        } else {
            ++depth;
        }
    }
}

void enumerate_mt(int n, const std::function<void(const MonotoneTriangle&)>& emit,
                  int max_n) {
    enumerate_mt_rows(
        n,
        [&](const std::uint64_t* rows) {
            std::vector<Subset> r;
            r.reserve(n + 1);
            for (int m = 0; m <= n; ++m) r.push_back(Subset(n, rows[m]));
            emit(MonotoneTriangle(std::move(r)));
        },
        max_n);
}

std::vector<MonotoneTriangle> all_mt(int n, int max_n) {
    std::vector<MonotoneTriangle> out;
    enumerate_mt(n, [&](const MonotoneTriangle& t) { out.push_back(t); }, max_n);
    return out;
}

}  // namespace mtcomb
