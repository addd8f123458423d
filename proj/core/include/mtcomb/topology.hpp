#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtcomb/bigint.hpp"
#include "mtcomb/weak_dag.hpp"

namespace mtcomb {

/// Moebius function of the weak order, memoized per lower endpoint.
/// mu(x,x) = 1, mu(x,y) = -sum over x <= z < y of mu(x,z).
class MobiusTable {
public:
    explicit MobiusTable(const WeakOrderDag& dag);

    /// Throws std::invalid_argument on incomparable pairs.
    Int mu(std::size_t x, std::size_t y) const;

private:
    const WeakOrderDag& dag_;
    mutable std::vector<std::vector<Int>> memo_;  // [x][y], lazily filled
    mutable std::vector<char> filled_;
};

/// Conjectured Moebius value of the interval [lower, upper]:
/// J = rows where they differ; (-1)^#J when J subseteq Des(upper) and
/// upper x pi_{w0(J)} = lower, else 0.
struct ConjecturePrediction {
    Int value;
    Subset J;         // rows of disagreement
    bool sphere;      // true when the sphere clause fired
};

ConjecturePrediction conjecture_prediction(const WeakOrderDag& dag, std::size_t lower,
                                           std::size_t upper);

struct ConjectureReport {
    std::size_t pairs = 0;
    std::size_t agreements = 0;
    std::vector<std::pair<std::size_t, std::size_t>> discrepancies;
    bool pass() const { return discrepancies.empty(); }
};

/// Compares mobius against conjecture_prediction over all comparable pairs.
ConjectureReport verify_conjecture(const WeakOrderDag& dag);

/// Order complex of the open interval (lower, upper) in the weak order.
struct IntervalComplex {
    std::vector<std::size_t> proper;               // node ids strictly between
    std::vector<std::vector<int>> faces_by_dim;    // packed: bitmask over proper
    int dimension = -1;
};

IntervalComplex interval_complex(const WeakOrderDag& dag, std::size_t lower,
                                 std::size_t upper, std::size_t max_proper = 16);

/// Reduced integral Betti numbers, via boundary maps and integer Smith
/// normal form.  Index i is the rank of reduced H_i.
std::vector<Int> betti_numbers(const IntervalComplex& complex);

struct StructureReport {
    bool is_lattice = true;
    bool is_ranked = true;
    // On lattice failure: a pair with no least upper bound and its minimal
    // upper bounds within the interval.
    std::optional<std::pair<std::size_t, std::size_t>> join_failure;
    std::vector<std::size_t> minimal_upper_bounds;
    int min_maximal_chain = 0;  // strict-cover steps along maximal chains
    int max_maximal_chain = 0;
};

StructureReport structure_checks(const WeakOrderDag& dag, std::size_t lower,
                                 std::size_t upper);

}  // namespace mtcomb
