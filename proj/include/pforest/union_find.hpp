#pragma once

#include <vector>

namespace pforest {

// Disjoint sets over 1..n, union by size with path halving.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1), size_(parent_.size(), 1), components_(n) {
        for (int v = 0; v <= n; ++v) {
            parent_[static_cast<std::size_t>(v)] = v;
        }
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // Returns false when x and y were already in the same set.
    bool unite(int x, int y) {
        int rx = find(x);
        int ry = find(y);
        if (rx == ry) {
            return false;
        }
        if (size_[static_cast<std::size_t>(rx)] < size_[static_cast<std::size_t>(ry)]) {
            std::swap(rx, ry);
        }
        parent_[static_cast<std::size_t>(ry)] = rx;
        size_[static_cast<std::size_t>(rx)] += size_[static_cast<std::size_t>(ry)];
        --components_;
        return true;
    }

    bool same(int x, int y) { return find(x) == find(y); }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

}  // namespace pforest
