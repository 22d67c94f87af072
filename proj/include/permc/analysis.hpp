#pragma once

// Decompositions of a permutation into runs, strict runs and shuffled
// upsequences, plus the entropy measure H(X) = sum (n_i/n) lg(n/n_i).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "permc/detail/splay_directory.hpp"
#include "permc/permutation.hpp"

namespace permc {

struct run_decomposition {
    std::vector<std::size_t> lengths;     // Runs = <n_1..n_rho>
    std::vector<std::size_t> down_steps;  // positions d with pi(d+1) < pi(d)
    [[nodiscard]] std::size_t count() const { return lengths.size(); }
};

struct strict_run_decomposition {
    std::vector<std::size_t> lengths;           // SRuns
    std::vector<std::size_t> heads;             // first position of each strict run
    std::vector<std::size_t> head_run_lengths;  // HRuns: runs of the head-value sequence
    [[nodiscard]] std::size_t count() const { return lengths.size(); }
};

struct sus_partition {
    std::vector<std::size_t> labels;   // S[1..n], labels numbered by creation order from 1
    std::vector<std::size_t> lengths;  // SUS, indexed by label - 1
    [[nodiscard]] std::size_t count() const { return lengths.size(); }
};

run_decomposition runs(const permutation& pi);
strict_run_decomposition strict_runs(const permutation& pi);
sus_partition partition_sus(const permutation& pi);

// H(X); 0 for an empty sequence. Throws validation_error on a zero entry.
double entropy(std::span<const std::size_t> x);

// Minimum number of increasing subsequences covering pi, computed as the
// length of the longest decreasing subsequence.
std::size_t sus_size_oracle(const permutation& pi);

// Run lengths of an arbitrary sequence under `less`; n - 1 comparisons.
template <typename T, typename Less = std::less<T>>
std::vector<std::size_t> detect_runs(std::span<const T> a, std::uint64_t& comparisons, Less less = {}) {
    std::vector<std::size_t> lengths;
    if (a.empty()) return lengths;
    std::size_t start = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        ++comparisons;
        if (less(a[i], a[i - 1])) {
            lengths.push_back(i - start);
            start = i;
        }
    }
    lengths.push_back(a.size() - start);
    return lengths;
}

// Greedy partition into increasing subsequences: each element joins the
// sequence whose last value is the largest one below it, or opens a new
// sequence. The directory is a splay tree, so the total search cost adapts
// to the entropy of the resulting lengths. Keys must be distinct.
template <typename T, typename Less = std::less<T>>
sus_partition greedy_sus_partition(std::span<const T> a, std::uint64_t& comparisons, Less less = {}) {
    sus_partition out;
    out.labels.resize(a.size());
    detail::splay_directory<T, Less> dir(less);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto label = dir.find_predecessor(a[i], comparisons);
        if (label) {
            dir.replace_root_key(a[i]);
            ++out.lengths[*label - 1];
            out.labels[i] = *label;
        } else {
            out.lengths.push_back(1);
            out.labels[i] = out.lengths.size();
            dir.insert_min(a[i], out.labels[i]);
        }
    }
    return out;
}

} // namespace permc
