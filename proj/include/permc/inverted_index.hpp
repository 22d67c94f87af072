#pragma once

// Word-level self-index. Concatenating the posting lists of words 1..rho
// (each increasing) gives a permutation pi of the n text positions with one
// ascending block per word; a runs codec over those blocks stores pi, and V
// holds the first offset of every list.
//
//   occurrence(w, j) = pi(V[w] + j - 1)
//   access(p)        = the w with V[w] <= pi^-1(p) < V[w + 1]

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permc/container.hpp"
#include "permc/runs_codec.hpp"

namespace permc {

class inverted_index {
public:
    inverted_index() = default;

    // Word ids must be exactly 1..rho for some rho >= 1 (no gaps). Throws
    // validation_error otherwise.
    static inverted_index build(std::span<const std::size_t> text, bool compressed = false);

    [[nodiscard]] std::size_t size() const { return codec_.size(); }
    [[nodiscard]] std::size_t vocabulary() const { return starts_.empty() ? 0 : starts_.size() - 1; }
    [[nodiscard]] std::size_t list_length(std::size_t w) const;
    [[nodiscard]] const std::vector<std::size_t>& list_starts() const { return starts_; }
    [[nodiscard]] const runs_codec& codec() const { return codec_; }

    // Text position of the j-th occurrence of w.
    [[nodiscard]] std::size_t occurrence(std::size_t w, std::size_t j) const;
    // Word at text position p.
    [[nodiscard]] std::size_t access(std::size_t p) const;
    // Occurrences j .. j + len - 1 of w.
    [[nodiscard]] std::vector<std::size_t> range(std::size_t w, std::size_t j, std::size_t len) const;
    // First occurrence of w after position x.
    [[nodiscard]] std::optional<std::size_t> successor(std::size_t w, std::size_t x) const;
    // Positions p with T[p] = w1 and T[p + shift] = w2, by alternating
    // successor probes on the two lists.
    [[nodiscard]] std::vector<std::size_t> intersect(std::size_t w1, std::size_t w2, std::size_t shift = 1) const;
    // Phrase occurrences of "w1 w2".
    [[nodiscard]] std::vector<std::size_t> phrase(std::size_t w1, std::size_t w2) const { return intersect(w1, w2, 1); }

    [[nodiscard]] std::vector<std::size_t> text() const;
    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    static inverted_index from_container(const container& c);

private:
    void check_word(std::size_t w, const char* op) const;

    runs_codec codec_;
    std::vector<std::size_t> starts_;  // V[1..rho+1], 1-based offsets, V[rho+1] = n + 1
};

} // namespace permc
