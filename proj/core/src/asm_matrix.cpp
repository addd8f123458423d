#include "mtcomb/asm_matrix.hpp"

#include <stdexcept>

#include "mtcomb/altvec.hpp"

namespace mtcomb {

AsmMatrix::AsmMatrix(std::vector<std::vector<int>> e) : entries(std::move(e)) {
    n = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("AsmMatrix: not square");
    for (int i = 0; i < n; ++i)
        if (!is_alternating(entries[i]))
            throw std::invalid_argument("AsmMatrix: row " + std::to_string(i + 1) + " not alternating");
    for (int j = 0; j < n; ++j) {
        AltVector col(n);
        for (int i = 0; i < n; ++i) col[i] = entries[i][j];
        if (!is_alternating(col))
            throw std::invalid_argument("AsmMatrix: column " + std::to_string(j + 1) + " not alternating");
    }
}

AsmMatrix AsmMatrix::identity(int n) { return perm_to_asm(Permutation::identity(n)); }

std::string AsmMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out += " ";
            out += std::to_string(entries[i][j]);
        }
        out += "\n";
    }
    return out;
}

MonotoneTriangle asm_to_mt(const AsmMatrix& A) {
    int n = A.n;
    std::vector<Subset> rows;
    rows.reserve(n + 1);
    std::vector<int> partial(n, 0);
    rows.push_back(Subset::empty(n));
    for (int i = 0; i < n; ++i) {
        std::uint64_t bits = 0;
        for (int j = 0; j < n; ++j) {
            partial[j] += A.entries[i][j];
            if (partial[j] < 0 || partial[j] > 1)
                throw std::invalid_argument("asm_to_mt: partial row sum not 0/1-valued");
            if (partial[j]) bits |= std::uint64_t{1} << j;
        }
        rows.push_back(Subset(n, bits));
    }
    return MonotoneTriangle(std::move(rows));
}

AsmMatrix mt_to_asm(const MonotoneTriangle& T) {
    int n = T.n;
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (int m = 1; m <= n; ++m)
        for (int j = 0; j < n; ++j)
            e[m - 1][j] = int((T.rows[m].bits >> j) & 1) - int((T.rows[m - 1].bits >> j) & 1);
    return AsmMatrix(std::move(e));
}

AsmMatrix perm_to_asm(const Permutation& w) {
    int n = w.size();
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i) e[i - 1][w[i] - 1] = 1;
    return AsmMatrix(std::move(e));
}

long long inversion_number(const AsmMatrix& A) {
    int n = A.n;
    long long inv = 0;
    // Treat (k,l) as the current entry: pair it with entries a_{ij} from
    // earlier rows i<k in strictly larger columns j>l.
    std::vector<long long> above_right(n, 0);  // sum_{i<k, j>l} a_{ij}
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l)
            inv += static_cast<long long>(A.entries[k][l]) * above_right[l];
        long long run = 0;
        for (int l = n - 1; l >= 0; --l) {
            above_right[l] += run;
            run += A.entries[k][l];
        }
    }
    return inv;
}

AsmMatrix w0_reflect(const AsmMatrix& A) {
    int n = A.n;
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[i][j] = A.entries[i][n - 1 - j];
    return AsmMatrix(std::move(e));
}

}  // namespace mtcomb
