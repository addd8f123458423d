#pragma once

#include <stdexcept>
#include <vector>

namespace mtcomb {

/// A permutation of [n] in one-line notation.
struct Permutation {
    std::vector<int> one_line;

    Permutation() = default;
    explicit Permutation(std::vector<int> w) : one_line(std::move(w)) {
        std::vector<bool> seen(one_line.size(), false);
        for (int x : one_line) {
            if (x < 1 || x > static_cast<int>(one_line.size()) || seen[x - 1])
                throw std::invalid_argument("Permutation: not a rearrangement of 1..n");
            seen[x - 1] = true;
        }
    }

    int size() const { return static_cast<int>(one_line.size()); }
    int operator[](int i) const { return one_line[i - 1]; }  // 1-based

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }
    static Permutation longest(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    Permutation inverse() const {
        std::vector<int> w(one_line.size());
        for (int i = 0; i < size(); ++i) w[one_line[i] - 1] = i + 1;
        return Permutation(std::move(w));
    }

    bool operator==(const Permutation& o) const { return one_line == o.one_line; }
    bool operator<(const Permutation& o) const { return one_line < o.one_line; }
};

}  // namespace mtcomb
