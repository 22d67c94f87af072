#pragma once

// Plain bitvector with rank/select. Positions are 1-based; rank takes a
// prefix length in [0, n].
//
// Layout: bits packed LSB-first in 64-bit words. The rank directory stores,
// per 512-bit superblock, one absolute count word and one word holding seven
// 9-bit counts relative to the superblock start (one per 64-bit block after
// the first). Select keeps the superblock index of every 4096th one (and
// zero) and finishes with a binary search over superblocks plus a local scan.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permc/serialize.hpp"

namespace permc {

// Append-only bit buffer used to assemble a bit_vector.
class bit_builder {
public:
    bit_builder() = default;
    explicit bit_builder(std::size_t reserve_bits) { words_.reserve((reserve_bits + 63) / 64); }

    void push_back(bool bit) {
        if (n_ % 64 == 0) words_.push_back(0);
        if (bit) words_.back() |= std::uint64_t{1} << (n_ % 64);
        ++n_;
    }

    // Appends the low `width` bits of `value`, least significant first.
    void append_bits(std::uint64_t value, unsigned width);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::vector<std::uint64_t>&& take_words() && { return std::move(words_); }
    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::vector<std::uint64_t> words_;
    std::size_t n_ = 0;
};

// Reads `width` bits starting at bit `pos` of a LSB-first word array.
std::uint64_t read_bits(std::span<const std::uint64_t> words, std::size_t pos, unsigned width);

class bit_vector {
public:
    static constexpr std::size_t block_bits = 64;
    static constexpr std::size_t superblock_bits = 512;
    static constexpr std::size_t select_sample = 4096;

    bit_vector() { build_directory(); }
    bit_vector(std::vector<std::uint64_t> words, std::size_t n);
    explicit bit_vector(std::span<const bool> bits);
    explicit bit_vector(bit_builder&& b);
    explicit bit_vector(const std::vector<bool>& bits);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t ones() const { return ones_; }
    [[nodiscard]] std::size_t zeros() const { return n_ - ones_; }

    [[nodiscard]] bool access(std::size_t i) const;
    [[nodiscard]] bool operator[](std::size_t i) const { return access(i); }

    [[nodiscard]] std::size_t rank1(std::size_t i) const;
    [[nodiscard]] std::size_t rank0(std::size_t i) const { return i - rank1(i); }
    [[nodiscard]] std::size_t rank(bool c, std::size_t i) const { return c ? rank1(i) : rank0(i); }

    [[nodiscard]] std::size_t select1(std::size_t j) const;
    [[nodiscard]] std::size_t select0(std::size_t j) const;
    [[nodiscard]] std::size_t select(bool c, std::size_t j) const { return c ? select1(j) : select0(j); }

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

    // Bits held by the payload words and by the rank/select directories.
    [[nodiscard]] std::size_t payload_bits() const { return n_; }
    [[nodiscard]] std::size_t directory_bits() const;

    void serialize(byte_writer& out) const;
    static bit_vector deserialize(byte_reader& in);

    friend bool operator==(const bit_vector& a, const bit_vector& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void build_directory();
    [[nodiscard]] std::size_t relative_count(std::size_t superblock, std::size_t word_in_sb) const;
    template <bool One>
    [[nodiscard]] std::size_t select_impl(std::size_t j) const;

    std::vector<std::uint64_t> words_;
    std::size_t n_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> counts_;  // two words per superblock, plus a sentinel pair
    std::vector<std::uint64_t> select1_samples_;
    std::vector<std::uint64_t> select0_samples_;
};

// Position (0-based) of the (r+1)-th set bit of `w`; requires r < popcount(w).
unsigned select_in_word(std::uint64_t w, unsigned r);

} // namespace permc
