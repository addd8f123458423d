#pragma once

#include <vector>

#include "mtcomb/bigint.hpp"

namespace mtcomb {

/// Dense polynomial with big-integer coefficients, coeffs[i] = coefficient
/// of x^i.  Trailing zeros are stripped on normalization.
struct IntPolynomial {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void normalize();
};

struct PositivityReport {
    bool nonnegative = true;
    bool no_internal_zeros = true;
    bool log_concave = true;  // c_i^2 >= c_{i-1} c_{i+1} for interior i
};

PositivityReport log_concavity_check(const IntPolynomial& p);

/// Exact count of distinct real roots via a Sturm sequence over rationals,
/// run on the squarefree part p / gcd(p, p').  Real-rooted means every
/// complex root is real, i.e. #distinct real roots == deg of squarefree part.
struct RealRootReport {
    int degree = 0;            // of the squarefree part
    int distinct_real_roots = 0;
    bool real_rooted = false;
};

RealRootReport real_rootedness_check(const IntPolynomial& p);

}  // namespace mtcomb
