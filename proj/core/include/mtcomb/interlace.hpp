#pragma once

#include <vector>

#include "mtcomb/altvec.hpp"
#include "mtcomb/subset.hpp"

namespace mtcomb {

/// J interlaces I: {j_1..j_k} <=_comp I <=_comp {j_{l-k+1}..j_l} with k=#I, l=#J.
/// This is the order relation of the poset Phi_n. Returns false (no error)
/// when #I > #J; throws on ground-size mismatch.
bool leq_lace(const Subset& I, const Subset& J);

/// For #J = #I+1: is 1_J - 1_I alternating?  Agrees with leq_lace on covers.
bool cover_diff_is_alternating(const Subset& I, const Subset& J);

/// Componentwise smallest (k+1)-subset strictly between I and J in <=_lace.
/// Requires I <=_lace J and #J >= #I + 2; h_m = max(i_{m-1}, j_m) with i_0 = 0.
Subset h_min(const Subset& I, const Subset& J);

/// Componentwise largest such subset; h'_m = min(i_m, j_{m-1+l-k}) with
/// i_{k+1} treated as n+1, equivalently w0(h_min(w0(I), w0(J))).
Subset h_max(const Subset& I, const Subset& J);

/// A saturated chain I = I_k <_lace I_{k+1} <_lace ... <_lace I_l = J.
struct MonotoneTrapezoid {
    std::vector<Subset> rows;  // cardinalities k, k+1, ..., l

    const Subset& bottom() const { return rows.front(); }
    const Subset& top() const { return rows.back(); }
    bool operator==(const MonotoneTrapezoid& o) const { return rows == o.rows; }
};

/// True iff rows form a valid (bottom,top)-monotone trapezoid.
bool is_valid_trapezoid(const MonotoneTrapezoid& t);

/// The componentwise smallest (I,J)-monotone trapezoid,
/// with rows given by the closed form h^(m)_p = max(j_p, i_{p+k-m}).
MonotoneTrapezoid minimal_trapezoid(const Subset& I, const Subset& J);

/// The componentwise largest (I,J)-monotone trapezoid (w0-mirror of minimal).
MonotoneTrapezoid maximal_trapezoid(const Subset& I, const Subset& J);

}  // namespace mtcomb
