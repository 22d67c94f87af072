#pragma once

// Permutation codec over strict runs (blocks where pi(i+k) = pi(i) + k).
// R marks run heads by position and Rinv marks them by value; the heads
// collapse to a permutation pi' over [nSRuns] held in a runs codec:
//
//   pi'(i) = rank1(Rinv, pi(select1(R, i)))
//   pi(i)  = select1(Rinv, pi'(rank1(R, i))) + i - select1(R, rank1(R, i))

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

#include "permc/bitmap.hpp"
#include "permc/container.hpp"
#include "permc/permutation.hpp"
#include "permc/runs_codec.hpp"

namespace permc {

class strict_codec {
public:
    strict_codec() = default;

    // Head marks are compressed by default; `compressed_inner` selects the
    // bitmaps of the inner runs codec.
    static strict_codec encode(const permutation& pi, bool compressed_marks = true, bool compressed_inner = false);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t strict_run_count() const { return heads_.ones(); }
    [[nodiscard]] const bitmap& heads() const { return heads_; }
    [[nodiscard]] const bitmap& head_values() const { return head_values_; }
    [[nodiscard]] const runs_codec& inner() const { return inner_; }

    [[nodiscard]] std::size_t apply(std::size_t i) const;
    [[nodiscard]] std::size_t inverse(std::size_t i) const;
    [[nodiscard]] permutation decode() const;
    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    static strict_codec from_container(const container& c);

private:
    void check_position(std::size_t i, const char* op) const;

    std::size_t n_ = 0;
    bitmap heads_;        // R
    bitmap head_values_;  // Rinv
    runs_codec inner_;
};

// Sorts keys covered by few strict runs: one successor test per adjacent
// pair finds the strict runs, their heads are sorted adaptively, and the
// runs are copied out in head order. `is_next(a, b)` tells whether b
// immediately follows a; each call counts as one comparison.
template <typename T, typename Less, typename IsNext>
sort_stats sort_strict(std::span<T> a, Less less, IsNext is_next) {
    sort_stats st;
    if (a.empty()) return st;
    std::vector<std::size_t> starts{0};
    for (std::size_t i = 1; i < a.size(); ++i) {
        ++st.comparisons;
        if (!is_next(a[i - 1], a[i])) starts.push_back(i);
    }
    if (starts.size() == 1) return st;
    starts.push_back(a.size());

    std::vector<std::size_t> order(starts.size() - 1);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    auto by_head = [&](std::size_t x, std::size_t y) { return less(a[starts[x]], a[starts[y]]); };
    auto inner = sort_adaptive(std::span<std::size_t>(order), by_head);
    st.comparisons += inner.comparisons;

    std::vector<T> out;
    out.reserve(a.size());
    for (auto k : order)
        for (std::size_t p = starts[k]; p < starts[k + 1]; ++p) out.push_back(std::move(a[p]));
    std::move(out.begin(), out.end(), a.begin());
    return st;
}

template <typename T>
    requires std::is_integral_v<T>
sort_stats sort_strict(std::span<T> a) {
    return sort_strict(a, std::less<T>{}, [](const T& x, const T& y) { return y == x + 1; });
}

} // namespace permc
