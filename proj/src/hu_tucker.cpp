#include "permc/hu_tucker.hpp"

#include <optional>
#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "permc/errors.hpp"

namespace permc {

std::size_t ceil_log2(std::size_t x) { return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1)); }

alphabetic_code_tree alphabetic_code_tree::from_links(const std::vector<std::int64_t>& left,
                                                      const std::vector<std::int64_t>& right, std::int64_t root,
                                                      std::span<const std::uint64_t> weights) {
    alphabetic_code_tree t;
    const std::size_t r = weights.size();
    t.leaf_node_.assign(r, -1);
    if (root < 0) return t;
    t.nodes_.reserve(left.size());

    // Iterative preorder; scratch ids below r are leaves.
    std::vector<std::pair<std::int64_t, std::int64_t>> stack{{root, -1}};  // (scratch id, new parent)
    std::vector<std::int64_t> new_id(left.size(), -1);
    while (!stack.empty()) {
        auto [s, parent] = stack.back();
        stack.pop_back();
        auto id = static_cast<std::int64_t>(t.nodes_.size());
        new_id[static_cast<std::size_t>(s)] = id;
        code_node nd;
        nd.parent = parent;
        nd.depth = parent < 0 ? 0 : t.nodes_[static_cast<std::size_t>(parent)].depth + 1;
        if (parent >= 0) {
            auto& p = t.nodes_[static_cast<std::size_t>(parent)];
            if (p.left < 0) p.left = id;
            else p.right = id;
        }
        if (static_cast<std::size_t>(s) < r) {
            nd.weight = weights[static_cast<std::size_t>(s)];
            nd.first_leaf = nd.last_leaf = static_cast<std::size_t>(s);
            t.leaf_node_[static_cast<std::size_t>(s)] = id;
        }
        t.nodes_.push_back(nd);
        if (static_cast<std::size_t>(s) >= r) {
            stack.emplace_back(right[static_cast<std::size_t>(s)], id);
            stack.emplace_back(left[static_cast<std::size_t>(s)], id);
        }
    }
    // Children follow their parent in preorder, so a reverse sweep aggregates.
    for (std::size_t i = t.nodes_.size(); i-- > 0;) {
        auto& nd = t.nodes_[i];
        if (nd.is_leaf()) continue;
        // A node created with left set but right still -1 cannot occur: every
        // internal scratch node has two children.
        const auto& l = t.nodes_[static_cast<std::size_t>(nd.left)];
        const auto& rr = t.nodes_[static_cast<std::size_t>(nd.right)];
        nd.weight = l.weight + rr.weight;
        nd.first_leaf = l.first_leaf;
        nd.last_leaf = rr.last_leaf;
    }
    for (std::size_t k = 0; k < r; ++k)
        if (t.leaf_node_[k] < 0) throw std::logic_error("alphabetic_code_tree: leaf not reachable");
    return t;
}

alphabetic_code_tree alphabetic_code_tree::from_levels(std::span<const std::uint64_t> weights,
                                                       std::span<const std::size_t> levels) {
    const std::size_t r = weights.size();
    if (levels.size() != r) throw validation_error("from_levels: size mismatch");
    if (r == 0) return {};
    std::vector<std::int64_t> left(r, -1), right(r, -1);
    std::vector<std::pair<std::int64_t, std::size_t>> stack;
    for (std::size_t k = 0; k < r; ++k) {
        stack.emplace_back(static_cast<std::int64_t>(k), levels[k]);
        while (stack.size() >= 2 && stack.back().second == stack[stack.size() - 2].second &&
               stack.back().second > 0) {
            auto b = stack.back();
            stack.pop_back();
            auto a = stack.back();
            stack.pop_back();
            auto id = static_cast<std::int64_t>(left.size());
            left.push_back(a.first);
            right.push_back(b.first);
            stack.emplace_back(id, a.second - 1);
        }
    }
    if (stack.size() != 1 || stack[0].second != 0) throw validation_error("from_levels: levels not realizable");
    return from_links(left, right, stack[0].first, weights);
}

namespace {

std::int64_t balanced_links(std::size_t lo, std::size_t hi, std::vector<std::int64_t>& left,
                            std::vector<std::int64_t>& right) {
    if (lo == hi) return static_cast<std::int64_t>(lo);
    std::size_t mid = lo + (hi - lo) / 2;  // left part gets ceil(k/2) leaves
    auto l = balanced_links(lo, mid, left, right);
    auto r = balanced_links(mid + 1, hi, left, right);
    auto id = static_cast<std::int64_t>(left.size());
    left.push_back(l);
    right.push_back(r);
    return id;
}

} // namespace

alphabetic_code_tree alphabetic_code_tree::balanced(std::span<const std::uint64_t> weights) {
    const std::size_t r = weights.size();
    if (r == 0) return {};
    std::vector<std::int64_t> left(r, -1), right(r, -1);
    auto root = balanced_links(0, r - 1, left, right);
    return from_links(left, right, root, weights);
}

alphabetic_code_tree alphabetic_code_tree::from_preorder(const std::vector<bool>& shape,
                                                         std::span<const std::uint64_t> weights) {
    const std::size_t r = weights.size();
    if (r == 0) {
        if (!shape.empty()) throw format_error("code tree shape given for zero leaves");
        return {};
    }
    if (shape.size() != 2 * r - 1) throw format_error("code tree shape length mismatch");
    std::vector<std::int64_t> left(r, -1), right(r, -1);
    // (scratch id, children attached so far)
    std::vector<std::pair<std::int64_t, int>> open;
    std::size_t next_leaf = 0;
    std::int64_t root = -1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        std::int64_t id;
        if (shape[i]) {
            id = static_cast<std::int64_t>(left.size());
            left.push_back(-1);
            right.push_back(-1);
        } else {
            if (next_leaf >= r) throw format_error("code tree shape has too many leaves");
            id = static_cast<std::int64_t>(next_leaf++);
        }
        if (open.empty()) {
            if (root >= 0) throw format_error("code tree shape has trailing nodes");
            root = id;
        } else {
            auto& [p, filled] = open.back();
            if (filled == 0) left[static_cast<std::size_t>(p)] = id;
            else right[static_cast<std::size_t>(p)] = id;
            if (++filled == 2) open.pop_back();
        }
        if (shape[i]) open.emplace_back(id, 0);
    }
    if (!open.empty() || next_leaf != r) throw format_error("code tree shape incomplete");
    return from_links(left, right, root, weights);
}

std::vector<std::size_t> alphabetic_code_tree::leaf_depths() const {
    std::vector<std::size_t> d(leaf_node_.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = nodes_[static_cast<std::size_t>(leaf_node_[k])].depth;
    return d;
}

std::vector<std::uint64_t> alphabetic_code_tree::leaf_weights() const {
    std::vector<std::uint64_t> w(leaf_node_.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = nodes_[static_cast<std::size_t>(leaf_node_[k])].weight;
    return w;
}

std::size_t alphabetic_code_tree::max_depth() const {
    std::size_t m = 0;
    for (const auto& nd : nodes_) m = std::max(m, nd.depth);
    return m;
}

std::vector<bool> alphabetic_code_tree::preorder_shape() const {
    std::vector<bool> s(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) s[i] = !nodes_[i].is_leaf();
    return s;
}

std::uint64_t tree_cost(const alphabetic_code_tree& tree) {
    std::uint64_t cost = 0;
    for (const auto& nd : tree.nodes())
        if (nd.is_leaf()) cost += nd.weight * nd.depth;
    return cost;
}

namespace {

// Combination phase state. Work nodes 0..r-1 are the leaves; combined
// nodes are appended. Nodes between two consecutive leaves that are still
// external form a region; any two members of a region are compatible.
class hu_tucker_combiner {
public:
    explicit hu_tucker_combiner(std::span<const std::uint64_t> w) : r_(w.size()) {
        const std::size_t cap = 2 * r_ - 1;
        weight_.assign(w.begin(), w.end());
        weight_.resize(cap);
        key_.resize(cap);
        for (std::size_t k = 0; k < r_; ++k) key_[k] = k;
        tree_left_.assign(cap, -1);
        tree_right_.assign(cap, -1);
        heap_left_.assign(cap, -1);
        heap_right_.assign(cap, -1);
        heap_rank_.assign(cap, 1);
        prev_ext_.resize(r_);
        next_ext_.resize(r_);
        for (std::size_t k = 0; k < r_; ++k) {
            prev_ext_[k] = static_cast<std::int64_t>(k) - 1;
            next_ext_[k] = k + 1 < r_ ? static_cast<std::int64_t>(k + 1) : -1;
        }
        first_ext_ = 0;
        external_.assign(r_, true);
        heap_.assign(r_ + 1, -1);
        cand_.assign(r_ + 1, std::nullopt);
        for (std::size_t g = 0; g + 1 < r_; ++g) refresh(g);
    }

    // Runs all r - 1 combinations; returns the root work node.
    std::int64_t run() {
        std::int64_t last = 0;
        std::size_t next = r_;
        while (!queue_.empty()) {
            auto [sum, lk, g] = *queue_.begin();
            queue_.erase(queue_.begin());
            cand_[g].reset();
            auto [x, y] = two_smallest(g);
            auto z = static_cast<std::int64_t>(next++);
            weight_[z] = weight_[x] + weight_[y];
            key_[z] = key_[x];
            tree_left_[z] = x;
            tree_right_[z] = y;

            int internals = (x >= static_cast<std::int64_t>(r_)) + (y >= static_cast<std::int64_t>(r_));
            for (int k = 0; k < internals; ++k) heap_[g] = pop(heap_[g]);

            std::size_t active = g;
            std::int64_t rb = right_boundary(g);
            if (rb >= 0 && (rb == x || rb == y)) {
                auto rg = static_cast<std::size_t>(rb);
                drop_candidate(rg);
                heap_[g] = merge(heap_[g], heap_[rg]);
                heap_[rg] = -1;
                unlink(rg);
            }
            if (g < r_ && (static_cast<std::int64_t>(g) == x || static_cast<std::int64_t>(g) == y)) {
                std::size_t p = prev_ext_[g] >= 0 ? static_cast<std::size_t>(prev_ext_[g]) : r_;
                drop_candidate(p);
                heap_[p] = merge(heap_[p], heap_[g]);
                heap_[g] = -1;
                unlink(g);
                active = p;
            }
            heap_[active] = merge(heap_[active], z);
            refresh(active);
            last = z;
        }
        return last;
    }

    [[nodiscard]] const std::vector<std::int64_t>& tree_left() const { return tree_left_; }
    [[nodiscard]] const std::vector<std::int64_t>& tree_right() const { return tree_right_; }

private:
    [[nodiscard]] bool before(std::int64_t a, std::int64_t b) const {
        return weight_[a] < weight_[b] || (weight_[a] == weight_[b] && key_[a] < key_[b]);
    }

    std::int64_t merge(std::int64_t a, std::int64_t b) {
        if (a < 0) return b;
        if (b < 0) return a;
        if (before(b, a)) std::swap(a, b);
        heap_right_[a] = merge(heap_right_[a], b);
        auto rank_of = [&](std::int64_t h) { return h < 0 ? 0u : heap_rank_[h]; };
        if (rank_of(heap_left_[a]) < rank_of(heap_right_[a])) std::swap(heap_left_[a], heap_right_[a]);
        heap_rank_[a] = rank_of(heap_right_[a]) + 1;
        return a;
    }

    std::int64_t pop(std::int64_t h) { return merge(heap_left_[h], heap_right_[h]); }

    [[nodiscard]] std::int64_t right_boundary(std::size_t g) const {
        return g < r_ ? next_ext_[g] : first_ext_;
    }

    void unlink(std::size_t leaf) {
        external_[leaf] = false;
        auto p = prev_ext_[leaf], nx = next_ext_[leaf];
        if (p >= 0) next_ext_[p] = nx;
        else first_ext_ = nx;
        if (nx >= 0) prev_ext_[nx] = p;
    }

    [[nodiscard]] std::pair<std::int64_t, std::int64_t> two_smallest(std::size_t g) const {
        std::int64_t members[4];
        int m = 0;
        if (g < r_) members[m++] = static_cast<std::int64_t>(g);
        if (auto rb = right_boundary(g); rb >= 0) members[m++] = rb;
        if (auto h = heap_[g]; h >= 0) {
            members[m++] = h;
            auto a = heap_left_[h], b = heap_right_[h];
            if (a >= 0 && (b < 0 || before(a, b))) members[m++] = a;
            else if (b >= 0) members[m++] = b;
        }
        if (m < 2) return {-1, -1};
        std::int64_t best = -1, second = -1;
        for (int k = 0; k < m; ++k) {
            auto e = members[k];
            if (best < 0 || before(e, best)) {
                second = best;
                best = e;
            } else if (second < 0 || before(e, second)) {
                second = e;
            }
        }
        if (key_[second] < key_[best]) std::swap(best, second);
        return {best, second};
    }

    void drop_candidate(std::size_t g) {
        if (cand_[g]) {
            queue_.erase(*cand_[g]);
            cand_[g].reset();
        }
    }

    void refresh(std::size_t g) {
        drop_candidate(g);
        auto [x, y] = two_smallest(g);
        if (x < 0) return;
        entry e{weight_[x] + weight_[y], key_[x], g};
        queue_.insert(e);
        cand_[g] = e;
    }

    using entry = std::tuple<std::uint64_t, std::size_t, std::size_t>;  // (sum, left key, region)

    std::size_t r_;
    std::vector<std::uint64_t> weight_;
    std::vector<std::size_t> key_;
    std::vector<std::int64_t> tree_left_, tree_right_;
    std::vector<std::int64_t> heap_left_, heap_right_;
    std::vector<unsigned> heap_rank_;
    std::vector<std::int64_t> prev_ext_, next_ext_;
    std::int64_t first_ext_ = -1;
    std::vector<bool> external_;
    std::vector<std::int64_t> heap_;  // per region (indexed by left boundary leaf, r for the leftmost)
    std::vector<std::optional<entry>> cand_;
    std::set<entry> queue_;
};

} // namespace

alphabetic_code_tree build_code(std::span<const std::uint64_t> weights) {
    const std::size_t r = weights.size();
    if (r == 0) throw validation_error("build_code: no frequencies");
    for (std::size_t k = 0; k < r; ++k)
        if (weights[k] == 0) throw validation_error("build_code: zero frequency at index " + std::to_string(k + 1));
    if (r == 1) {
        std::size_t level = 0;
        return alphabetic_code_tree::from_levels(weights, std::span<const std::size_t>(&level, 1));
    }

    hu_tucker_combiner comb(weights);
    auto root = comb.run();

    // Levelling: leaf depths in the combination tree.
    std::vector<std::size_t> levels(r);
    std::vector<std::pair<std::int64_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        if (static_cast<std::size_t>(v) < r) {
            levels[static_cast<std::size_t>(v)] = d;
        } else {
            stack.emplace_back(comb.tree_left()[v], d + 1);
            stack.emplace_back(comb.tree_right()[v], d + 1);
        }
    }
    return alphabetic_code_tree::from_levels(weights, levels);
}

alphabetic_code_tree rebalance(const alphabetic_code_tree& tree, std::size_t rho) {
    if (tree.empty() || rho <= 1) return tree;
    const std::size_t threshold = 4 * ceil_log2(rho);
    if (tree.max_depth() <= threshold) return tree;

    const std::size_t r = tree.leaf_count();
    auto weights = tree.leaf_weights();
    std::vector<std::int64_t> left(r, -1), right(r, -1);
    // Scratch id of each original node; internal nodes get fresh ids.
    std::vector<std::int64_t> scratch(tree.nodes().size(), -1);
    auto nodes = tree.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].is_leaf()) scratch[i] = static_cast<std::int64_t>(nodes[i].first_leaf);
    }
    // Post-order over the preorder array: children have larger indices.
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const auto& nd = nodes[i];
        if (nd.is_leaf()) continue;
        if (nd.depth == threshold) {
            scratch[i] = balanced_links(nd.first_leaf, nd.last_leaf, left, right);
        } else if (nd.depth < threshold) {
            auto id = static_cast<std::int64_t>(left.size());
            left.push_back(scratch[static_cast<std::size_t>(nd.left)]);
            right.push_back(scratch[static_cast<std::size_t>(nd.right)]);
            scratch[i] = id;
        }
    }
    return alphabetic_code_tree::from_links(left, right, scratch[0], weights);
}

} // namespace permc
