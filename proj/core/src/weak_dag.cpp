#include "mtcomb/weak_dag.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "mtcomb/enumerate.hpp"

namespace mtcomb {

ExtensionStrategy parse_strategy(const std::string& name) {
    if (name == "canonical-topological") return ExtensionStrategy::CanonicalTopological;
    if (name == "permutations-first") return ExtensionStrategy::PermutationsFirst;
    if (name == "seeded-random") return ExtensionStrategy::SeededRandom;
    throw std::invalid_argument("unknown linear-extension strategy: " + name);
}

WeakOrderDag::WeakOrderDag(int n, int max_n, bool build_closure) : n_(n) {
    nodes_ = all_mt(n, max_n);
    index_.reserve(nodes_.size() * 2);
    for (std::size_t id = 0; id < nodes_.size(); ++id) index_[nodes_[id]] = id;

    int gens = n > 0 ? n - 1 : 0;
    edges_.assign(nodes_.size(), std::vector<std::size_t>(gens));
    descents_.reserve(nodes_.size());
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        std::uint64_t des = 0;
        for (int i = 1; i <= gens; ++i) {
            MonotoneTriangle t = apply_pi(nodes_[id], i);
            if (t == nodes_[id]) {
                edges_[id][i - 1] = id;
            } else {
                edges_[id][i - 1] = index_.at(t);
                des |= std::uint64_t{1} << (i - 1);
            }
        }
        descents_.push_back(Subset(gens, des));
    }

    bottom_ = index_.at(perm_to_mt(Permutation::identity(n)));

    // Canonical order is a topological order (each pi-edge strictly lowers
    // the row key), so descending closures can be accumulated in id order.
    if (build_closure) {
        closure_.reserve(nodes_.size());
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            NodeSet c(nodes_.size());
            c.set(id);
            for (std::size_t t : edges_[id])
                if (t != id) c |= closure_[t];
            closure_.push_back(std::move(c));
        }
    }

    // Shortest strict pi-chain to bottom: BFS on reversed edges from bottom.
    depth_.assign(nodes_.size(), -1);
    std::vector<std::vector<std::size_t>> rev(nodes_.size());
    for (std::size_t id = 0; id < nodes_.size(); ++id)
        for (std::size_t t : edges_[id])
            if (t != id) rev[t].push_back(id);
    std::deque<std::size_t> q{bottom_};
    depth_[bottom_] = 0;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (std::size_t y : rev[x])
            if (depth_[y] < 0) {
                depth_[y] = depth_[x] + 1;
                q.push_back(y);
            }
    }
}

std::size_t WeakOrderDag::index_of(const MonotoneTriangle& T) const {
    auto it = index_.find(T);
    if (it == index_.end())
        throw std::invalid_argument("WeakOrderDag: triangle not in MT_n");
    return it->second;
}

std::vector<std::size_t> WeakOrderDag::linear_extension(ExtensionStrategy strategy,
                                                        std::uint64_t seed) const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    switch (strategy) {
        case ExtensionStrategy::CanonicalTopological:
            // Canonical ids already place every edge target before its source.
            return order;
        case ExtensionStrategy::PermutationsFirst: {
            // S_n is an order ideal, so moving all permutation triangles to
            // the front (keeping relative canonical order) stays a linear
            // extension.
            std::stable_partition(order.begin(), order.end(), [&](std::size_t id) {
                return mt_to_perm(nodes_[id]).has_value();
            });
            return order;
        }
        case ExtensionStrategy::SeededRandom: {
            std::mt19937_64 rng(seed);
            std::vector<std::uint64_t> priority(size());
            for (auto& p : priority) p = rng();
            // Kahn over reversed edges, always releasing the ready node with
            // the smallest random priority.
            std::vector<int> pending(size(), 0);
            std::vector<std::vector<std::size_t>> rev(size());
            for (std::size_t id = 0; id < size(); ++id)
                for (std::size_t t : edges_[id])
                    if (t != id) {
                        ++pending[id];
                        rev[t].push_back(id);
                    }
            using Entry = std::pair<std::uint64_t, std::size_t>;
            std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
            for (std::size_t id = 0; id < size(); ++id)
                if (pending[id] == 0) ready.emplace(priority[id], id);
            order.clear();
            while (!ready.empty()) {
                std::size_t id = ready.top().second;
                ready.pop();
                order.push_back(id);
                for (std::size_t s : rev[id])
                    if (--pending[s] == 0) ready.emplace(priority[s], s);
            }
            return order;
        }
    }
    throw std::logic_error("unreachable");
}

bool WeakOrderDag::is_linear_extension(const std::vector<std::size_t>& order) const {
    if (order.size() != size()) return false;
    std::vector<std::size_t> pos(size(), size());
    for (std::size_t p = 0; p < order.size(); ++p) {
        if (order[p] >= size() || pos[order[p]] != size()) return false;
        pos[order[p]] = p;
    }
    for (std::size_t id = 0; id < size(); ++id)
        for (std::size_t t : edges_[id])
            if (t != id && pos[t] >= pos[id]) return false;
    return true;
}

}  // namespace mtcomb
