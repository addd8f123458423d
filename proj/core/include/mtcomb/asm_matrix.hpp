#pragma once

#include <string>
#include <vector>

#include "mtcomb/triangle.hpp"

namespace mtcomb {

/// An n x n alternating sign matrix: every row and column lies in Alt_n.
struct AsmMatrix {
    int n = 0;
    std::vector<std::vector<int>> entries;  // entries[i][j], 0-based

    AsmMatrix() = default;
    explicit AsmMatrix(std::vector<std::vector<int>> e);

    static AsmMatrix identity(int n);

    int at(int i, int j) const { return entries[i - 1][j - 1]; }  // 1-based

    bool operator==(const AsmMatrix& o) const { return entries == o.entries; }
    bool operator<(const AsmMatrix& o) const { return entries < o.entries; }

    std::string to_string() const;
};

/// Partial row sums: T_m is the support of the sum of the first m rows.
MonotoneTriangle asm_to_mt(const AsmMatrix& A);

/// Row m of A is 1_{T_m} - 1_{T_{m-1}}; inverse of asm_to_mt.
AsmMatrix mt_to_asm(const MonotoneTriangle& T);

/// The permutation matrix of w^{-1}, i.e. the matrix of T(w).
AsmMatrix perm_to_asm(const Permutation& w);

/// inv(A) = sum over i<k, j>l of a_{ij} a_{kl}.
long long inversion_number(const AsmMatrix& A);

/// Reflection through a vertical axis (columns j <-> n+1-j).
AsmMatrix w0_reflect(const AsmMatrix& A);

}  // namespace mtcomb
