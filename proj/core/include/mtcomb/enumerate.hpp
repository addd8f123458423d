#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "mtcomb/triangle.hpp"

namespace mtcomb {

/// Interlacing successors: all (m+1)-subsets J of [n] with I <=_lace J,
/// in increasing bit-value order.  Results are memoized per (n, bits).
class SuccessorTable {
public:
    explicit SuccessorTable(int n) : n_(n) {}
    const std::vector<std::uint64_t>& successors(std::uint64_t bits);

private:
    int n_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> cache_;
};

/// Emits each element of MT_n exactly once, in canonical order
/// (lexicographic on the tuple of row bit-set values).
/// Throws ResourceGuardError when n exceeds max_n.
void enumerate_mt(int n, const std::function<void(const MonotoneTriangle&)>& emit,
                  int max_n = 8);

/// Materialized canonical-order list of MT_n.
std::vector<MonotoneTriangle> all_mt(int n, int max_n = 8);

/// Streaming variant exposing the raw row-bit stack (rows 0..n), avoiding
/// MonotoneTriangle construction; used by the counting and stats sweeps.
void enumerate_mt_rows(int n,
                       const std::function<void(const std::uint64_t* rows)>& emit,
                       int max_n = 8);

}  // namespace mtcomb
