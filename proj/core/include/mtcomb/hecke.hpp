#pragma once

#include <vector>

#include "mtcomb/triangle.hpp"

namespace mtcomb {

/// A subset of the generator indices [n-1].
using DescentSet = Subset;

/// T x pi_i: replace row i with H_min(T_{i-1}, T_{i+1}).
MonotoneTriangle apply_pi(const MonotoneTriangle& T, int i);

/// The opposite action: replace row i with H_max(T_{i-1}, T_{i+1}).
MonotoneTriangle apply_pi_prime(const MonotoneTriangle& T, int i);

/// Left-to-right composition of apply_pi over a generator word.
MonotoneTriangle apply_word(const MonotoneTriangle& T, const std::vector<int>& word);

/// Des(T) = {k : T x pi_k != T}, as a subset of [n-1].
DescentSet descent_set(const MonotoneTriangle& T);

/// The no-preimage characterization: {k : no T' != T has T' x pi_k = T},
/// decided locally via the H_max witness.  Equals descent_set.
DescentSet descent_no_preimage_set(const MonotoneTriangle& T);

/// T x pi_{w0(J)}: the componentwise smallest triangle agreeing with T on
/// rows outside J, computed by fixpoint iteration of pi over J.
MonotoneTriangle pi_parabolic_min(const MonotoneTriangle& T, const Subset& J);

}  // namespace mtcomb
