#pragma once

// Optimal alphabetic (order-preserving) prefix codes. The tree shapes every
// runs codec: leaf k stands for the k-th run and leaves read left to right
// follow run order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace permc {

struct code_node {
    std::int64_t left = -1;   // -1 for leaves
    std::int64_t right = -1;
    std::int64_t parent = -1;
    std::uint64_t weight = 0;
    std::size_t first_leaf = 0;  // leaf range covered, 0-based inclusive
    std::size_t last_leaf = 0;
    std::size_t depth = 0;
    [[nodiscard]] bool is_leaf() const { return left < 0; }
};

class alphabetic_code_tree {
public:
    alphabetic_code_tree() = default;

    // Alphabetic tree whose leaf k sits at depth levels[k]. Throws
    // validation_error if the levels are not realizable in order.
    static alphabetic_code_tree from_levels(std::span<const std::uint64_t> weights,
                                            std::span<const std::size_t> levels);
    // Preorder shape bits: true = internal node, false = leaf.
    static alphabetic_code_tree from_preorder(const std::vector<bool>& shape, std::span<const std::uint64_t> weights);
    // Weight-ignoring balanced tree; left subtrees take ceil(k/2) leaves.
    static alphabetic_code_tree balanced(std::span<const std::uint64_t> weights);

    [[nodiscard]] std::size_t leaf_count() const { return leaf_node_.size(); }
    [[nodiscard]] bool empty() const { return nodes_.empty(); }
    // Nodes are stored in preorder, so the root is node 0.
    [[nodiscard]] std::int64_t root() const { return nodes_.empty() ? -1 : 0; }
    [[nodiscard]] const code_node& node(std::int64_t id) const { return nodes_[static_cast<std::size_t>(id)]; }
    [[nodiscard]] std::span<const code_node> nodes() const { return nodes_; }
    [[nodiscard]] std::int64_t leaf_node(std::size_t leaf) const { return leaf_node_[leaf]; }
    [[nodiscard]] std::vector<std::size_t> leaf_depths() const;
    [[nodiscard]] std::size_t max_depth() const;
    [[nodiscard]] std::uint64_t total_weight() const { return nodes_.empty() ? 0 : nodes_[0].weight; }
    [[nodiscard]] std::vector<bool> preorder_shape() const;

    friend bool operator==(const alphabetic_code_tree& a, const alphabetic_code_tree& b) {
        return a.preorder_shape() == b.preorder_shape() && a.leaf_weights() == b.leaf_weights();
    }
    [[nodiscard]] std::vector<std::uint64_t> leaf_weights() const;

private:
    friend alphabetic_code_tree rebalance(const alphabetic_code_tree& tree, std::size_t rho);

    // Builds the preorder node array from child links of a scratch tree.
    static alphabetic_code_tree from_links(const std::vector<std::int64_t>& left, const std::vector<std::int64_t>& right,
                                           std::int64_t root, std::span<const std::uint64_t> weights);

    std::vector<code_node> nodes_;
    std::vector<std::int64_t> leaf_node_;
};

// Hu-Tucker construction: combination (lightest compatible pair, ties to
// the leftmost left element), levelling, then recombination by level.
// Requires at least one weight, all positive.
alphabetic_code_tree build_code(std::span<const std::uint64_t> weights);

// Replaces every subtree rooted at depth 4*ceil(lg rho) by a balanced tree
// over its leaves, capping depth at 5*ceil(lg rho).
alphabetic_code_tree rebalance(const alphabetic_code_tree& tree, std::size_t rho);

// L = sum of weight * depth over the leaves.
std::uint64_t tree_cost(const alphabetic_code_tree& tree);

// ceil(lg x) for x >= 1.
std::size_t ceil_log2(std::size_t x);

} // namespace permc
