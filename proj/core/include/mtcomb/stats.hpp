#pragma once

#include <cstdint>
#include <vector>

#include "mtcomb/bigint.hpp"
#include "mtcomb/polynomial.hpp"
#include "mtcomb/subset.hpp"

namespace mtcomb {

enum class FlagKind { FlagF, FlagH };

/// Exact counts indexed by subsets J of [n-1], stored densely by bit value.
struct FlagVector {
    int n = 0;
    FlagKind kind = FlagKind::FlagF;
    std::vector<Int> values;  // size 2^(n-1), values[J.bits]

    Int& at(const Subset& J) { return values[J.bits]; }
    const Int& at(const Subset& J) const { return values[J.bits]; }
};

/// h_J = #{T in MT_n : Des(T) = J}, streamed over the enumeration.
/// jobs > 1 splits the sweep by the singleton row T_1 with per-thread
/// histograms merged afterwards.
FlagVector descent_distribution(int n, int jobs = 1, int max_n = 7);

/// Number of chains in the proper part of Phi_n whose rank set is exactly J,
/// by DP over consecutive rank levels.  Independent of the descent machinery.
Int flag_f_direct(int n, const Subset& J);

/// All f_J for J subseteq [n-1].
FlagVector flag_f_all(int n, int max_n = 7);

/// Inclusion-exclusion: h_J = sum_{I subseteq J} (-1)^(#J - #I) f_I.
FlagVector flag_h_from_f(const FlagVector& flag_f);

/// h_i = sum over #J = i of h_J, as coefficients of h(Phi_n, t).
IntPolynomial h_vector(int n, int jobs = 1, int max_n = 7);

/// f[i] = number of chains of i elements in the proper part (f[0] = 1).
std::vector<Int> f_vector(int n, int max_n = 7);

/// Count of maximal elements of (MT_n, <_W), by counting DAG nodes with no
/// incoming pi-edge from a distinct node.  Equals the top h-coefficient.
Int maximal_element_count(int n, int max_n = 7);

/// Index of the largest h-coefficient (smallest index on ties).
int h_argmax(const IntPolynomial& h);

}  // namespace mtcomb
