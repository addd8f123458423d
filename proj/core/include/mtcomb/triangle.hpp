#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtcomb/permutation.hpp"
#include "mtcomb/subset.hpp"

namespace mtcomb {

/// A monotone triangle of size n: rows T_0,...,T_n with #T_m = m and each
/// T_{m+1} interlacing T_m.  T_0 = {} and T_n = [n] are stored explicitly.
struct MonotoneTriangle {
    int n = 0;
    std::vector<Subset> rows;  // size n+1

    MonotoneTriangle() = default;
    explicit MonotoneTriangle(std::vector<Subset> r);

    const Subset& row(int m) const { return rows[m]; }

    bool operator==(const MonotoneTriangle& o) const { return rows == o.rows; }
    bool operator!=(const MonotoneTriangle& o) const { return !(*this == o); }

    /// Canonical order: lexicographic on the tuple of row bit-set values.
    bool operator<(const MonotoneTriangle& o) const;

    /// Rows T_1..T_{n-1} packed for hashing/sorting.
    std::vector<std::uint64_t> key() const;

    std::string to_string() const;  // e.g. "2; 1 3" for (2 / 13) in MT_3
};

/// Throws (naming the offending row) if rows do not form a monotone triangle.
void validate_triangle(const std::vector<Subset>& rows);

/// T(w) = (0, {w_1}, {w_1,w_2}, ...); the permutation triangles.
MonotoneTriangle perm_to_mt(const Permutation& w);

/// Inverse on permutation triangles; absent when some T_m is not a subset of T_{m+1}.
std::optional<Permutation> mt_to_perm(const MonotoneTriangle& T);

MonotoneTriangle w0_reflect(const MonotoneTriangle& T);

}  // namespace mtcomb

template <>
struct std::hash<mtcomb::MonotoneTriangle> {
    std::size_t operator()(const mtcomb::MonotoneTriangle& t) const noexcept {
        std::size_t h = std::hash<int>{}(t.n);
        for (const auto& r : t.rows)
            h = h * 0x100000001b3ull ^ std::hash<std::uint64_t>{}(r.bits);
        return h;
    }
};
