#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtcomb/interlace.hpp"
#include "mtcomb/triangle.hpp"
#include "mtcomb/weak_dag.hpp"

namespace mtcomb {

/// All saturated chains from I to J in Phi_n; empty iff not I <=_lace J.
std::vector<MonotoneTrapezoid> maximal_chains(const Subset& I, const Subset& J);

/// Label of a cover step, encoded as the bit value of S(1_J - 1_I) in 2^[n-1].
/// Comparing these integers is the canonical linear extension of <_EL.
std::uint64_t el_label(const Subset& lower, const Subset& upper);

/// Label sequence of a saturated chain.
std::vector<std::uint64_t> chain_labels(const MonotoneTrapezoid& chain);

struct ElReport {
    bool pass = true;
    std::string detail;  // offending interval and chains on failure
};

/// Checks, for every interval [I,J] of Phi_n: exactly one weakly rising
/// chain, that chain is the minimal trapezoid, and its first label is
/// strictly EL-below every other first step out of I.
ElReport verify_el_labeling(int n, int max_n = 6);

/// MT_n ordered by lexicographic comparison of chain label sequences
/// (labels compared by their S(v) bit value).
std::vector<MonotoneTriangle> el_lex_order(int n, int max_n = 7);

struct ShellingReport {
    bool pass = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness_failure;  // (i, j)
};

/// Pure-shelling check for an ordering of the facets of Phi_n's order
/// complex (facets = monotone triangles).  Witness search is restricted to
/// facets differing from F_j in exactly one row, which is exact for
/// codimension-one intersections.
ShellingReport verify_shelling(const std::vector<MonotoneTriangle>& facet_order,
                               int jobs = 1);

}  // namespace mtcomb
