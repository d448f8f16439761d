#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace graphconf::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

    // Dense labels 0..k-1, numbered in order of the least element of each class.
    std::vector<std::uint32_t> labels(std::uint32_t* count = nullptr) {
        std::vector<std::uint32_t> out(parent_.size());
        std::vector<std::uint32_t> root_label(parent_.size(), UINT32_MAX);
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            auto r = find(i);
            if (root_label[r] == UINT32_MAX) root_label[r] = next++;
            out[i] = root_label[r];
        }
        if (count) *count = next;
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

} // namespace graphconf::detail
