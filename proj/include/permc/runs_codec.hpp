#pragma once

// Permutation codec over ascending runs. The runs are the leaves of a
// Hu-Tucker tree over their lengths (rebalanced to depth <= 5 ceil(lg rho));
// every internal node keeps the merge trace of its two children as a
// bitmap (0 = element taken from the left child). pi(i) walks down to the
// leaf holding position i and back up with select; pi^-1(i) walks down with
// rank from value i at the root.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permc/analysis.hpp"
#include "permc/bitmap.hpp"
#include "permc/container.hpp"
#include "permc/detail/tree_merge.hpp"
#include "permc/hu_tucker.hpp"
#include "permc/permutation.hpp"

namespace permc {

struct space_breakdown {
    std::size_t payload = 0;
    std::size_t directories = 0;
    std::size_t pointers = 0;
    [[nodiscard]] std::size_t total() const { return payload + directories + pointers; }
    space_breakdown& operator+=(const space_breakdown& o) {
        payload += o.payload;
        directories += o.directories;
        pointers += o.pointers;
        return *this;
    }
};

struct run_hit {
    std::size_t offset = 0;  // 1-based offset inside the run
    std::size_t value = 0;
};

class runs_codec {
public:
    runs_codec() = default;

    // Encodes pi over its maximal ascending runs.
    static runs_codec encode(const permutation& pi, bool compressed = false);
    // Encodes pi over a caller-given partition into ascending blocks (they
    // need not be maximal). Throws validation_error if a block descends or
    // the lengths do not add up to n.
    static runs_codec encode_blocks(const permutation& pi, std::span<const std::size_t> lengths,
                                    bool compressed = false);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t run_count() const { return run_starts_.empty() ? 0 : run_starts_.size() - 1; }
    [[nodiscard]] std::vector<std::size_t> run_lengths() const;
    // First position of run t (1-based t); run_start(rho + 1) = n + 1.
    [[nodiscard]] std::size_t run_start(std::size_t t) const { return run_starts_[t - 1]; }
    [[nodiscard]] const alphabetic_code_tree& tree() const { return tree_; }
    [[nodiscard]] bool compressed() const { return compressed_; }
    // Merge trace of an internal node (empty for leaves).
    [[nodiscard]] const bitmap& node_bitmap(std::int64_t node) const { return bitmaps_[static_cast<std::size_t>(node)]; }

    [[nodiscard]] std::size_t apply(std::size_t i) const;
    [[nodiscard]] std::size_t inverse(std::size_t i) const;

    // Positions pi^-1(i..j) as a set, reported in increasing position order.
    [[nodiscard]] std::vector<std::size_t> inverse_range(std::size_t i, std::size_t j) const;
    // Values pi(i..j), in position order.
    [[nodiscard]] std::vector<std::size_t> apply_range(std::size_t i, std::size_t j) const;
    // First element of run t greater than x, if any.
    [[nodiscard]] std::optional<run_hit> run_successor(std::size_t t, std::size_t x) const;

    [[nodiscard]] permutation decode() const;
    [[nodiscard]] space_breakdown size_in_bits() const;
    // Sum of node bitmap lengths, i.e. sum n_i * l_i over the leaves.
    [[nodiscard]] std::size_t bitmap_bits() const;

    [[nodiscard]] container to_container() const;
    static runs_codec from_container(const container& c);

private:
    static runs_codec build(const permutation& pi, std::vector<std::size_t> lengths, bool compressed);
    void check_position(std::size_t i, const char* op) const;

    std::size_t n_ = 0;
    bool compressed_ = false;
    std::vector<std::size_t> run_starts_;  // 1-based, with sentinel n + 1
    alphabetic_code_tree tree_;
    std::vector<bitmap> bitmaps_;  // indexed by tree node; empty for leaves
};

struct sort_stats {
    std::uint64_t comparisons = 0;
};

// Natural merge sort guided by a Hu-Tucker tree on the run lengths: n - 1
// comparisons to find the runs plus at most sum n_i * l_i to merge them.
// Keys must be distinct.
template <typename T, typename Less = std::less<T>>
sort_stats sort_adaptive(std::span<T> a, Less less = {}) {
    sort_stats st;
    auto lengths = detect_runs(std::span<const T>(a.data(), a.size()), st.comparisons, less);
    if (lengths.size() <= 1) return st;
    auto tree = build_code(std::span<const std::size_t>(lengths));
    std::vector<std::size_t> starts(lengths.size() + 1, 0);
    for (std::size_t k = 0; k < lengths.size(); ++k) starts[k + 1] = starts[k] + lengths[k];
    detail::merge_along_tree(tree, std::span<const std::size_t>(starts), a, less, st.comparisons, detail::no_trace{});
    return st;
}

} // namespace permc
