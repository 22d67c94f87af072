#pragma once

// Balanced wavelet tree over a sequence S[1..n] with symbols in [1..r].
// Each internal node splits its symbol range [lo, hi] at lo + (hi - lo) / 2
// and stores one bitmap (0 = left half); depth is ceil(lg r).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permc/bitmap.hpp"
#include "permc/serialize.hpp"

namespace permc {

class wavelet_sequence {
public:
    wavelet_sequence() = default;
    wavelet_sequence(std::span<const std::size_t> symbols, std::size_t alphabet, bool compressed = false);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t alphabet() const { return r_; }
    [[nodiscard]] std::size_t depth() const;

    [[nodiscard]] std::size_t access(std::size_t i) const;
    // Occurrences of c in S[1..i].
    [[nodiscard]] std::size_t rank(std::size_t c, std::size_t i) const;
    // Position of the j-th occurrence of c.
    [[nodiscard]] std::size_t select(std::size_t c, std::size_t j) const;

    [[nodiscard]] std::size_t payload_bits() const;
    [[nodiscard]] std::size_t directory_bits() const;

    void serialize(byte_writer& out) const;
    static wavelet_sequence deserialize(byte_reader& in);

private:
    struct node {
        std::size_t lo = 0, hi = 0;
        std::int64_t left = -1, right = -1;  // -1: leaf child
        bitmap bits;
    };

    std::int64_t build(std::vector<std::size_t>& seq, std::size_t lo, std::size_t hi, bool compressed);
    std::int64_t shape(std::size_t lo, std::size_t hi);  // allocate nodes without bitmaps

    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<node> nodes_;  // preorder; nodes_[0] is the root when r > 1
};

} // namespace permc
