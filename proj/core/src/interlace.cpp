#include "mtcomb/interlace.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtcomb {

bool leq_lace(const Subset& I, const Subset& J) {
    if (I.n != J.n)
        throw std::invalid_argument("leq_lace: ground-size mismatch");
    int k = I.cardinality(), l = J.cardinality();
    if (k > l) return false;
    auto iv = I.elements();
    auto jv = J.elements();
    for (int m = 0; m < k; ++m) {
        if (jv[m] > iv[m]) return false;            // {j_1..j_k} <=_comp I
        if (iv[m] > jv[l - k + m]) return false;    // I <=_comp {j_{l-k+1}..j_l}
    }
    return true;
}

bool cover_diff_is_alternating(const Subset& I, const Subset& J) {
    if (I.n != J.n)
        throw std::invalid_argument("cover_diff_is_alternating: ground-size mismatch");
    if (J.cardinality() != I.cardinality() + 1)
        throw std::invalid_argument("cover_diff_is_alternating: #J must be #I+1");
    return is_alternating(indicator_diff(I, J));
}

static void check_hmin_pre(const Subset& I, const Subset& J, const char* who) {
    if (J.cardinality() < I.cardinality() + 2)
        throw std::domain_error(std::string(who) + ": requires #J >= #I + 2");
    if (!leq_lace(I, J))
        throw std::domain_error(std::string(who) + ": requires I <=_lace J");
}

Subset h_min(const Subset& I, const Subset& J) {
    check_hmin_pre(I, J, "h_min");
    auto iv = I.elements();
    auto jv = J.elements();
    int k = static_cast<int>(iv.size());
    std::uint64_t bits = 0;
    for (int m = 1; m <= k + 1; ++m) {
        int im1 = (m >= 2) ? iv[m - 2] : 0;  // convention i_0 = 0
        int h = std::max(im1, jv[m - 1]);
        bits |= std::uint64_t{1} << (h - 1);
    }
    return Subset(I.n, bits);
}

Subset h_max(const Subset& I, const Subset& J) {
    check_hmin_pre(I, J, "h_max");
    auto iv = I.elements();
    auto jv = J.elements();
    int k = static_cast<int>(iv.size());
    int l = static_cast<int>(jv.size());
    std::uint64_t bits = 0;
    for (int m = 1; m <= k + 1; ++m) {
        int im = (m <= k) ? iv[m - 1] : I.n + 1;  // convention i_{k+1} = infinity
        int h = std::min(im, jv[m - 1 + l - k - 1]);
        bits |= std::uint64_t{1} << (h - 1);
    }
    return Subset(I.n, bits);
}

bool is_valid_trapezoid(const MonotoneTrapezoid& t) {
    if (t.rows.empty()) return false;
    int k = t.rows.front().cardinality();
    for (std::size_t m = 0; m < t.rows.size(); ++m) {
        if (t.rows[m].cardinality() != k + static_cast<int>(m)) return false;
        if (m > 0 && !leq_lace(t.rows[m - 1], t.rows[m])) return false;
    }
    return true;
}

MonotoneTrapezoid minimal_trapezoid(const Subset& I, const Subset& J) {
    if (!leq_lace(I, J))
        throw std::domain_error("minimal_trapezoid: requires I <=_lace J");
    auto iv = I.elements();
    auto jv = J.elements();
    int k = static_cast<int>(iv.size());
    int l = static_cast<int>(jv.size());
    MonotoneTrapezoid t;
    t.rows.reserve(l - k + 1);
    t.rows.push_back(I);
    for (int m = k + 1; m < l; ++m) {
        std::uint64_t bits = 0;
        for (int p = 1; p <= m; ++p) {
            int iq = (p + k - m >= 1) ? iv[p + k - m - 1] : 0;
            bits |= std::uint64_t{1} << (std::max(jv[p - 1], iq) - 1);
        }
        t.rows.push_back(Subset(I.n, bits));
    }
    if (l > k) t.rows.push_back(J);
    return t;
}

MonotoneTrapezoid maximal_trapezoid(const Subset& I, const Subset& J) {
    if (!leq_lace(I, J))
        throw std::domain_error("maximal_trapezoid: requires I <=_lace J");
    MonotoneTrapezoid m = minimal_trapezoid(w0_reflect(I), w0_reflect(J));
    for (auto& row : m.rows) row = w0_reflect(row);
    return m;
}

}  // namespace mtcomb
