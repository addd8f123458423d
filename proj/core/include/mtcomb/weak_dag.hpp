#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtcomb/hecke.hpp"
#include "mtcomb/triangle.hpp"

namespace mtcomb {

/// Fixed-universe bit set used for reachability closures.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void operator|=(const NodeSet& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    std::size_t size() const { return size_; }

    /// Ascending indices of set bits.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (std::uint64_t b = words_[w]; b; b &= b - 1)
                f((w << 6) + __builtin_ctzll(b));
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class ExtensionStrategy { CanonicalTopological, PermutationsFirst, SeededRandom };

ExtensionStrategy parse_strategy(const std::string& name);

/// All of MT_n with the labeled edges T -> T x pi_i (targets componentwise
/// smaller).  Immutable after construction.
class WeakOrderDag {
public:
    /// build_closure controls the O(|MT_n|^2)-bit reachability tables; skip
    /// them for large n when only edges/descents/depths are needed.
    explicit WeakOrderDag(int n, int max_n = 7, bool build_closure = true);

    int n() const { return n_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<MonotoneTriangle>& nodes() const { return nodes_; }
    const MonotoneTriangle& node(std::size_t id) const { return nodes_[id]; }
    std::size_t index_of(const MonotoneTriangle& T) const;
    std::size_t bottom() const { return bottom_; }  // T(identity)

    /// Edge targets by generator: edge_target(id, i) == id means pi_i fixes the node.
    std::size_t edge_target(std::size_t id, int i) const { return edges_[id][i - 1]; }
    const DescentSet& descents(std::size_t id) const { return descents_[id]; }

    bool has_closure() const { return !closure_.empty(); }

    /// weak_leq(x, y): x <=_W y, i.e. x reachable from y along pi-edges.
    bool weak_leq(std::size_t x, std::size_t y) const { return closure_[y].test(x); }
    bool weak_leq(const MonotoneTriangle& x, const MonotoneTriangle& y) const {
        return weak_leq(index_of(x), index_of(y));
    }

    /// The descending closure {x : x <=_W y} of node y.
    const NodeSet& closure(std::size_t y) const { return closure_[y]; }

    /// Minimum number of strict pi-steps from node down to bottom().
    int shortest_chain_length(std::size_t id) const { return depth_[id]; }

    /// A linear extension of <_W as node ids, smaller elements first.
    std::vector<std::size_t> linear_extension(ExtensionStrategy strategy,
                                              std::uint64_t seed = 0) const;

    /// True iff every pi-edge points from later to earlier in the ordering.
    bool is_linear_extension(const std::vector<std::size_t>& order) const;

private:
    int n_;
    std::vector<MonotoneTriangle> nodes_;
    std::unordered_map<MonotoneTriangle, std::size_t> index_;
    std::vector<std::vector<std::size_t>> edges_;  // [id][i-1] -> target id
    std::vector<DescentSet> descents_;
    std::vector<NodeSet> closure_;
    std::vector<int> depth_;
    std::size_t bottom_ = 0;
};

}  // namespace mtcomb
