#pragma once

// Splay tree over the last values of the open upsequences, used by the
// greedy shuffled-upsequence partition. Keys are distinct and ordered by
// `Less`; every key comparison bumps `comparisons`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace permc::detail {

template <typename T, typename Less>
class splay_directory {
public:
    explicit splay_directory(Less less) : less_(std::move(less)) {}

    [[nodiscard]] std::size_t size() const { return key_.size(); }

    // Label of the sequence whose last value is the largest one below x, or
    // nullopt. The visited node is splayed to the root either way.
    std::optional<std::size_t> find_predecessor(const T& x, std::uint64_t& comparisons) {
        std::int64_t v = root_, cand = -1, last = -1;
        while (v >= 0) {
            last = v;
            ++comparisons;
            if (less_(key_[v], x)) {
                cand = v;
                v = right_[v];
            } else {
                v = left_[v];
            }
        }
        if (cand >= 0) {
            splay(cand);
            return label_[cand];
        }
        if (last >= 0) splay(last);
        return std::nullopt;
    }

    // Replaces the root key. Valid after find_predecessor succeeded with x:
    // no other key lies between the old key and x.
    void replace_root_key(const T& x) { key_[root_] = x; }

    // Inserts a key smaller than every stored key as the new root.
    void insert_min(const T& x, std::size_t label) {
        auto id = static_cast<std::int64_t>(key_.size());
        key_.push_back(x);
        label_.push_back(label);
        left_.push_back(-1);
        right_.push_back(root_);
        parent_.push_back(-1);
        if (root_ >= 0) parent_[root_] = id;
        root_ = id;
    }

private:
    void rotate(std::int64_t x) {
        std::int64_t p = parent_[x], g = parent_[p];
        if (left_[p] == x) {
            left_[p] = right_[x];
            if (right_[x] >= 0) parent_[right_[x]] = p;
            right_[x] = p;
        } else {
            right_[p] = left_[x];
            if (left_[x] >= 0) parent_[left_[x]] = p;
            left_[x] = p;
        }
        parent_[p] = x;
        parent_[x] = g;
        if (g >= 0) {
            if (left_[g] == p) left_[g] = x;
            else right_[g] = x;
        } else {
            root_ = x;
        }
    }

    void splay(std::int64_t x) {
        while (parent_[x] >= 0) {
            std::int64_t p = parent_[x], g = parent_[p];
            if (g >= 0) {
                bool zigzig = (left_[g] == p) == (left_[p] == x);
                rotate(zigzig ? p : x);
            }
            rotate(x);
        }
    }

    Less less_;
    std::int64_t root_ = -1;
    std::vector<T> key_;
    std::vector<std::size_t> label_;
    std::vector<std::int64_t> left_, right_, parent_;
};

} // namespace permc::detail
