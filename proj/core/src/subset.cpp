#include "mtcomb/subset.hpp"

namespace mtcomb {

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

Subset w0_reflect(const Subset& s) {
    std::uint64_t b = 0;
    for (std::uint64_t x = s.bits; x; x &= x - 1) {
        int i = __builtin_ctzll(x) + 1;
        b |= std::uint64_t{1} << (s.n - i);
    }
    return Subset(s.n, b);
}

bool componentwise_leq(const Subset& a, const Subset& b) {
    if (a.n != b.n)
        throw std::invalid_argument("componentwise_leq: ground-size mismatch");
    if (a.cardinality() != b.cardinality())
        throw std::invalid_argument("componentwise_leq: cardinality mismatch");
    // a_m <= b_m for all m  <=>  #a∩[i,n] <= #b∩[i,n] for all i.
    std::uint64_t xa = a.bits, xb = b.bits;
    int ca = 0, cb = 0;
    for (int i = a.n; i >= 1; --i) {
        ca += (xa >> (i - 1)) & 1;
        cb += (xb >> (i - 1)) & 1;
        if (ca > cb) return false;
    }
    return true;
}

}  // namespace mtcomb
