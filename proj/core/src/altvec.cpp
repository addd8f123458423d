#include "mtcomb/altvec.hpp"

#include <stdexcept>

namespace mtcomb {

static void check_entries(const AltVector& v) {
    for (int e : v)
        if (e < -1 || e > 1)
            throw std::invalid_argument("AltVector: entry outside {-1,0,+1}");
}

bool is_alternating(const AltVector& v) {
    check_entries(v);
    int tail = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        tail += *it;
        if (tail < 0 || tail > 1) return false;
    }
    return tail == 1;
}

Subset alt_to_subset(const AltVector& v) {
    if (!is_alternating(v))
        throw std::invalid_argument("alt_to_subset: vector not in Alt_n");
    int n = static_cast<int>(v.size());
    std::uint64_t bits = 0;
    int tail = 0;
    for (int i = n - 1; i >= 1; --i) {  // tail sum over [i+1, n]
        tail += v[i];
        if (tail == 1) bits |= std::uint64_t{1} << (i - 1);
    }
    return Subset(n - 1, bits);
}

AltVector subset_to_alt(const Subset& s) {
    int n = s.n + 1;
    AltVector v(n, 0);
    v[0] = 1;
    for (int i : s.elements()) {
        v[i] += 1;
        v[i - 1] -= 1;
    }
    return v;
}

bool el_leq(const AltVector& v, const AltVector& w) {
    if (v.size() != w.size())
        throw std::invalid_argument("el_leq: length mismatch");
    Subset sv = alt_to_subset(v);
    Subset sw = alt_to_subset(w);
    return (sv.bits & ~sw.bits) == 0;
}

AltVector indicator_diff(const Subset& lower, const Subset& upper) {
    if (lower.n != upper.n)
        throw std::invalid_argument("indicator_diff: ground-size mismatch");
    AltVector v(lower.n, 0);
    for (int i = 1; i <= lower.n; ++i)
        v[i - 1] = int((upper.bits >> (i - 1)) & 1) - int((lower.bits >> (i - 1)) & 1);
    return v;
}

}  // namespace mtcomb
