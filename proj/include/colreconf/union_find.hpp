#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace colreconf {

/// Disjoint sets over 0..n-1 with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false if x and y were already together.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        --components_;
        return true;
    }

    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
    std::size_t component_size(std::size_t x) { return size_[find(x)]; }
    std::size_t component_count() const noexcept { return components_; }
    std::size_t size() const noexcept { return parent_.size(); }

    /// Component label per element, numbered 0,1,... in order of first
    /// appearance.
    std::vector<std::size_t> labels() {
        std::vector<std::size_t> label(parent_.size(), parent_.size());
        std::vector<std::size_t> out(parent_.size());
        std::size_t next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            auto r = find(i);
            if (label[r] == parent_.size()) label[r] = next++;
            out[i] = label[r];
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

}  // namespace colreconf
