#include "mtcomb/triangle.hpp"

#include <stdexcept>

#include "mtcomb/interlace.hpp"

namespace mtcomb {

void validate_triangle(const std::vector<Subset>& rows) {
    if (rows.empty())
        throw std::invalid_argument("triangle: no rows");
    int n = static_cast<int>(rows.size()) - 1;
    for (int m = 0; m <= n; ++m) {
        if (rows[m].n != n)
            throw std::invalid_argument("triangle: row " + std::to_string(m) + " has wrong ground size");
        if (rows[m].cardinality() != m)
            throw std::invalid_argument("triangle: row " + std::to_string(m) + " has wrong cardinality");
        if (m > 0 && !leq_lace(rows[m - 1], rows[m]))
            throw std::invalid_argument("triangle: row " + std::to_string(m) +
                                        " does not interlace row " + std::to_string(m - 1));
    }
}

MonotoneTriangle::MonotoneTriangle(std::vector<Subset> r) : rows(std::move(r)) {
    validate_triangle(rows);
    n = static_cast<int>(rows.size()) - 1;
}

bool MonotoneTriangle::operator<(const MonotoneTriangle& o) const {
    if (n != o.n) return n < o.n;
    for (int m = 1; m < n; ++m)
        if (rows[m].bits != o.rows[m].bits) return rows[m].bits < o.rows[m].bits;
    return false;
}

std::vector<std::uint64_t> MonotoneTriangle::key() const {
    std::vector<std::uint64_t> k;
    k.reserve(n > 1 ? n - 1 : 0);
    for (int m = 1; m < n; ++m) k.push_back(rows[m].bits);
    return k;
}

std::string MonotoneTriangle::to_string() const {
    std::string out;
    for (int m = 1; m < n; ++m) {
        if (m > 1) out += "; ";
        bool first = true;
        for (int e : rows[m].elements()) {
            if (!first) out += " ";
            out += std::to_string(e);
            first = false;
        }
    }
    return out;
}

MonotoneTriangle perm_to_mt(const Permutation& w) {
    int n = w.size();
    std::vector<Subset> rows;
    rows.reserve(n + 1);
    std::uint64_t bits = 0;
    rows.push_back(Subset::empty(n));
    for (int m = 1; m <= n; ++m) {
        bits |= std::uint64_t{1} << (w[m] - 1);
        rows.push_back(Subset(n, bits));
    }
    return MonotoneTriangle(std::move(rows));
}

std::optional<Permutation> mt_to_perm(const MonotoneTriangle& T) {
    std::vector<int> w;
    w.reserve(T.n);
    for (int m = 1; m <= T.n; ++m) {
        std::uint64_t diff = T.rows[m].bits & ~T.rows[m - 1].bits;
        if (__builtin_popcountll(diff) != 1 || (T.rows[m - 1].bits & ~T.rows[m].bits))
            return std::nullopt;
        w.push_back(__builtin_ctzll(diff) + 1);
    }
    return Permutation(std::move(w));
}

MonotoneTriangle w0_reflect(const MonotoneTriangle& T) {
    std::vector<Subset> rows;
    rows.reserve(T.rows.size());
    for (const auto& r : T.rows) rows.push_back(w0_reflect(r));
    return MonotoneTriangle(std::move(rows));
}

}  // namespace mtcomb
