#pragma once

#include <vector>

#include "mtcomb/subset.hpp"

namespace mtcomb {

/// A {-1,0,+1} vector; members of Alt_n are those passing is_alternating.
using AltVector = std::vector<int>;

/// True iff the nonzero entries alternate in sign, beginning and ending with +1.
/// Equivalently: every tail sum lies in {0,+1} and the total sum is +1.
/// Throws on entries outside {-1,0,+1}.
bool is_alternating(const AltVector& v);

/// The bijection Alt_n -> 2^[n-1], v |-> S(v) = {i : tail sum from i+1 is +1}.
/// Throws if v is not alternating.
Subset alt_to_subset(const AltVector& v);

/// Inverse bijection 2^[n-1] -> Alt_n: e_1 + sum_{i in S} (e_{i+1} - e_i).
AltVector subset_to_alt(const Subset& s);

/// The EL order on Alt_n, pulled back from inclusion on 2^[n-1]:
/// v <=_EL w iff S(v) is a subset of S(w).
bool el_leq(const AltVector& v, const AltVector& w);

/// Indicator-vector difference 1_J - 1_I as a signed vector.
AltVector indicator_diff(const Subset& lower, const Subset& upper);

}  // namespace mtcomb
