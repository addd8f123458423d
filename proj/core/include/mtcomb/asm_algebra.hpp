#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "mtcomb/asm_matrix.hpp"
#include "mtcomb/permutation.hpp"
#include "mtcomb/qsym.hpp"

namespace mtcomb {

/// Formal integer combination of same-size ASMs.
struct AsmCombination {
    int n = 0;
    std::map<AsmMatrix, Int> terms;

    void add(const AsmMatrix& A, const Int& c);
};

/// All C(a+b, a) interleavings of u in S_a with the shifted v (each v_i + a).
std::vector<Permutation> shuffles(const Permutation& u, const Permutation& v);

/// The row-shuffle product: interleave the rows of [A | 0] and [0 | B] in
/// all C(a+b, a) ways.  Every term is a valid (a+b)-ASM with coefficient 1.
AsmCombination asm_product(const AsmMatrix& A, const AsmMatrix& B);

/// Triangle of the single shuffle selected by S (#S = a): row k is
/// T(A)_i joined with the a-shifted T(B)_{k-i}, where i = #(S cap [k]).
MonotoneTriangle asm_product_triangle(const MonotoneTriangle& TA,
                                      const MonotoneTriangle& TB, const Subset& S);

/// phi(A) = L_{alpha(Des(T(A)))}, and its linear extension to combinations.
QSymElement phi_asm(const AsmMatrix& A);
QSymElement phi_asm(const AsmCombination& x);

/// All of ASM_n in canonical triangle order.
std::vector<AsmMatrix> all_asm(int n, int max_n = 7);

struct MorphismReport {
    bool pass = true;
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // (idx A, idx B)
    std::string detail;
};

/// Checks phi(A * B) = phi(A) * phi(B) for every A in ASM_a, B in ASM_b,
/// with the right side computed by the independent M-basis engine.
MorphismReport verify_morphism(int a, int b, int max_sum = 6, int jobs = 1);

/// phi of the sum of all A in ASM_n satisfying pred, in the M basis.
QSymElement phi_sum_m(int n, const std::function<bool(const AsmMatrix&)>& pred,
                      int max_n = 7);

}  // namespace mtcomb
