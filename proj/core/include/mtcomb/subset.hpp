#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtcomb {

constexpr int kMaxGroundSize = 62;

/// A subset of [n] = {1,...,n} stored as a bit set (position i <-> bit i-1).
struct Subset {
    int n = 0;
    std::uint64_t bits = 0;

    Subset() = default;
    Subset(int ground_size, std::uint64_t b) : n(ground_size), bits(b) {
        if (ground_size < 0 || ground_size > kMaxGroundSize)
            throw std::invalid_argument("Subset: ground size out of range [0,62]");
        if (ground_size < 64 && (b >> ground_size) != 0)
            throw std::invalid_argument("Subset: member outside ground set");
    }

    static Subset empty(int ground_size) { return Subset(ground_size, 0); }
    static Subset full(int ground_size) {
        return Subset(ground_size, ground_size == 0 ? 0 : (~std::uint64_t{0} >> (64 - ground_size)));
    }
    static Subset of(int ground_size, std::initializer_list<int> elems) {
        return of(ground_size, std::vector<int>(elems));
    }
    static Subset of(int ground_size, const std::vector<int>& elems) {
        std::uint64_t b = 0;
        for (int e : elems) {
            if (e < 1 || e > ground_size)
                throw std::invalid_argument("Subset: element outside [1,n]");
            b |= std::uint64_t{1} << (e - 1);
        }
        return Subset(ground_size, b);
    }

    int cardinality() const { return __builtin_popcountll(bits); }
    bool contains(int i) const { return i >= 1 && i <= n && (bits >> (i - 1)) & 1; }

    /// Elements in increasing order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(cardinality());
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    bool operator==(const Subset& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const Subset& o) const { return !(*this == o); }
    bool operator<(const Subset& o) const { return bits < o.bits; }  // canonical order within fixed n

    std::string to_string() const;
};

/// w0-reflection i -> n+1-i, an involutive automorphism of the interlacing order.
Subset w0_reflect(const Subset& s);

/// Componentwise order on equal-cardinality subsets: m-th smallest vs m-th smallest.
bool componentwise_leq(const Subset& a, const Subset& b);

}  // namespace mtcomb

template <>
struct std::hash<mtcomb::Subset> {
    std::size_t operator()(const mtcomb::Subset& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits * 0x9e3779b97f4a7c15ull ^ std::uint64_t(s.n));
    }
};
