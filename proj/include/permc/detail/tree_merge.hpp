#pragma once

// Bottom-up merge of ascending blocks along an alphabetic code tree. Leaf k
// of the tree owns block k; each internal node merges the (already sorted)
// areas of its two children, which are adjacent because the tree is
// alphabetic. The trace receives one bit per element taken: 0 from the left
// child, 1 from the right.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permc/hu_tucker.hpp"

namespace permc::detail {

struct no_trace {
    void begin(std::int64_t, std::size_t) {}
    void bit(bool) {}
    void end() {}
};

// block_starts holds the 0-based start of every block plus a final sentinel
// equal to data.size().
template <typename T, typename Less, typename Trace>
void merge_along_tree(const alphabetic_code_tree& tree, std::span<const std::size_t> block_starts, std::span<T> data,
                      Less less, std::uint64_t& comparisons, Trace&& trace) {
    auto nodes = tree.nodes();
    std::vector<T> buffer;
    // Preorder storage: children come after their parent, so a reverse sweep
    // is a valid post-order.
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const auto& nd = nodes[i];
        if (nd.is_leaf()) continue;
        const auto& left = nodes[static_cast<std::size_t>(nd.left)];
        std::size_t lo = block_starts[nd.first_leaf];
        std::size_t mid = block_starts[left.last_leaf + 1];
        std::size_t hi = block_starts[nd.last_leaf + 1];

        buffer.assign(data.begin() + static_cast<std::ptrdiff_t>(lo), data.begin() + static_cast<std::ptrdiff_t>(mid));
        std::size_t a = 0, b = mid, out = lo;
        const std::size_t a_end = buffer.size();
        trace.begin(static_cast<std::int64_t>(i), hi - lo);
        while (a < a_end && b < hi) {
            ++comparisons;
            if (less(data[b], buffer[a])) {
                data[out++] = std::move(data[b++]);
                trace.bit(true);
            } else {
                data[out++] = std::move(buffer[a++]);
                trace.bit(false);
            }
        }
        while (a < a_end) {
            data[out++] = std::move(buffer[a++]);
            trace.bit(false);
        }
        while (b < hi) {
            // Already in place when out == b.
            if (out != b) data[out] = std::move(data[b]);
            ++out;
            ++b;
            trace.bit(true);
        }
        trace.end();
    }
}

} // namespace permc::detail
