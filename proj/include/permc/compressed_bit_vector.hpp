#pragma once

// Entropy-compressed bitvector: 15-bit blocks stored as (class, offset)
// pairs, where the class is the block popcount (4 bits) and the offset is the
// block's index among all 15-bit words of that class, written in
// ceil(lg C(15, class)) bits. Query surface matches bit_vector.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permc/bit_vector.hpp"
#include "permc/serialize.hpp"

namespace permc {

class compressed_bit_vector {
public:
    static constexpr unsigned block_bits = 15;
    static constexpr std::size_t blocks_per_superblock = 64;
    static constexpr std::size_t select_sample = 4096;

    struct space {
        std::size_t class_bits = 0;
        std::size_t offset_bits = 0;
        std::size_t directory_bits = 0;
        [[nodiscard]] std::size_t payload() const { return class_bits + offset_bits; }
        [[nodiscard]] std::size_t total() const { return payload() + directory_bits; }
    };

    compressed_bit_vector();
    explicit compressed_bit_vector(const bit_vector& bits);
    explicit compressed_bit_vector(const std::vector<bool>& bits) : compressed_bit_vector(bit_vector(bits)) {}

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

    [[nodiscard]] space space_bits() const;
    [[nodiscard]] std::size_t payload_bits() const { return space_bits().payload(); }
    [[nodiscard]] std::size_t directory_bits() const { return space_bits().directory_bits; }

    void serialize(byte_writer& out) const;
    static compressed_bit_vector deserialize(byte_reader& in);

    friend bool operator==(const compressed_bit_vector& a, const compressed_bit_vector& b) {
        return a.n_ == b.n_ && a.classes_ == b.classes_ && a.offsets_ == b.offsets_;
    }

private:
    void build_directory();
    [[nodiscard]] unsigned block_class(std::size_t b) const;
    [[nodiscard]] std::uint32_t decode_block(std::size_t b, std::size_t offset_pos) const;
    template <bool One>
    [[nodiscard]] std::size_t select_impl(std::size_t j) const;

    std::size_t n_ = 0;
    std::size_t ones_ = 0;
    std::size_t offset_len_ = 0;               // bits used in offsets_
    std::vector<std::uint64_t> classes_;       // 4 bits per block
    std::vector<std::uint64_t> offsets_;       // variable-width offsets
    std::vector<std::uint64_t> sb_rank_;       // ones before each superblock (+ sentinel)
    std::vector<std::uint64_t> sb_offset_;     // offset-stream bit position of each superblock
    std::vector<std::uint64_t> select1_samples_;
    std::vector<std::uint64_t> select0_samples_;
};

// Zero-order entropy of a bit string with m ones among n, in bits (n*H0).
double binary_entropy_bits(std::size_t n, std::size_t m);

} // namespace permc
