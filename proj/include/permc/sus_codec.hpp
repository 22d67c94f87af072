#pragma once

// Permutation codec over shuffled upsequences. S[i] is the label of the
// upsequence holding position i (a wavelet sequence over [sigma]); pi' lists
// the upsequences one after another in label order and lives in a runs
// codec; A' has a one at A[l] + 1, where A[l] counts the elements of labels
// below l:
//
//   pi(i)    = pi'(A[S[i]] + rank_{S[i]}(S, i))
//   pi^-1(i) = select_l(S, pi'^-1(i) - A[l]),  l = rank1(A', pi'^-1(i))

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "permc/analysis.hpp"
#include "permc/bit_vector.hpp"
#include "permc/container.hpp"
#include "permc/permutation.hpp"
#include "permc/runs_codec.hpp"
#include "permc/wavelet_sequence.hpp"

namespace permc {

class sus_codec {
public:
    sus_codec() = default;

    static sus_codec encode(const permutation& pi, bool compressed_labels = true, bool compressed_inner = false);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] std::size_t sus_count() const { return starts_.ones(); }
    [[nodiscard]] const wavelet_sequence& labels() const { return labels_; }
    [[nodiscard]] const bit_vector& starts() const { return starts_; }
    [[nodiscard]] const runs_codec& inner() const { return inner_; }
    // A[l], the number of elements with label below l.
    [[nodiscard]] std::size_t offset(std::size_t label) const { return starts_.select1(label) - 1; }

    [[nodiscard]] std::size_t apply(std::size_t i) const;
    [[nodiscard]] std::size_t inverse(std::size_t i) const;
    [[nodiscard]] permutation decode() const;
    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    static sus_codec from_container(const container& c);

private:
    void check_position(std::size_t i, const char* op) const;

    wavelet_sequence labels_;  // S
    bit_vector starts_;        // A'
    runs_codec inner_;         // pi'
};

// Greedy partition into upsequences, then a Hu-Tucker-guided merge of the
// upsequences. Keys must be distinct.
template <typename T, typename Less = std::less<T>>
sort_stats sort_sus(std::span<T> a, Less less = {}) {
    sort_stats st;
    auto part = greedy_sus_partition(std::span<const T>(a.data(), a.size()), st.comparisons, less);
    if (part.count() <= 1) return st;

    std::vector<std::size_t> starts(part.count() + 1, 0);
    for (std::size_t l = 0; l < part.count(); ++l) starts[l + 1] = starts[l] + part.lengths[l];
    std::vector<T> grouped(a.size());
    {
        auto next = starts;
        for (std::size_t i = 0; i < a.size(); ++i) grouped[next[part.labels[i] - 1]++] = std::move(a[i]);
    }
    auto tree = build_code(std::span<const std::size_t>(part.lengths));
    detail::merge_along_tree(tree, std::span<const std::size_t>(starts), std::span<T>(grouped), less, st.comparisons,
                             detail::no_trace{});
    std::move(grouped.begin(), grouped.end(), a.begin());
    return st;
}

} // namespace permc
