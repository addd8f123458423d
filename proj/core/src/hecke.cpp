#include "mtcomb/hecke.hpp"

#include <stdexcept>

#include "mtcomb/interlace.hpp"

namespace mtcomb {

static void check_index(const MonotoneTriangle& T, int i, const char* who) {
    if (i < 1 || i > T.n - 1)
        throw std::invalid_argument(std::string(who) + ": generator index out of range");
}

MonotoneTriangle apply_pi(const MonotoneTriangle& T, int i) {
    check_index(T, i, "apply_pi");
    MonotoneTriangle out = T;
    out.rows[i] = h_min(T.rows[i - 1], T.rows[i + 1]);
    return out;
}

MonotoneTriangle apply_pi_prime(const MonotoneTriangle& T, int i) {
    check_index(T, i, "apply_pi_prime");
    MonotoneTriangle out = T;
    out.rows[i] = h_max(T.rows[i - 1], T.rows[i + 1]);
    return out;
}

MonotoneTriangle apply_word(const MonotoneTriangle& T, const std::vector<int>& word) {
    MonotoneTriangle out = T;
    for (int i : word) out = apply_pi(out, i);
    return out;
}

DescentSet descent_set(const MonotoneTriangle& T) {
    std::uint64_t bits = 0;
    for (int k = 1; k <= T.n - 1; ++k)
        if (T.rows[k] != h_min(T.rows[k - 1], T.rows[k + 1]))
            bits |= std::uint64_t{1} << (k - 1);
    return Subset(T.n - 1, bits);
}

DescentSet descent_no_preimage_set(const MonotoneTriangle& T) {
    std::uint64_t bits = 0;
    for (int k = 1; k <= T.n - 1; ++k) {
        // A preimage T' != T under pi_k differs from T only in row k, which
        // forces T_k = H_min; H_max then supplies the (distinct) witness row.
        bool has_preimage = T.rows[k] == h_min(T.rows[k - 1], T.rows[k + 1]) &&
                            h_max(T.rows[k - 1], T.rows[k + 1]) != T.rows[k];
        if (!has_preimage) bits |= std::uint64_t{1} << (k - 1);
    }
    return Subset(T.n - 1, bits);
}

MonotoneTriangle pi_parabolic_min(const MonotoneTriangle& T, const Subset& J) {
    if (J.n != T.n - 1)
        throw std::invalid_argument("pi_parabolic_min: J must be a subset of [n-1]");
    MonotoneTriangle out = T;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k : J.elements()) {
            Subset h = h_min(out.rows[k - 1], out.rows[k + 1]);
            if (out.rows[k] != h) {
                out.rows[k] = h;
                changed = true;
            }
        }
    }
    return out;
}

}  // namespace mtcomb
