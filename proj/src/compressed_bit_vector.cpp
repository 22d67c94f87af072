#include "permc/compressed_bit_vector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace permc {

namespace {

constexpr unsigned B = compressed_bit_vector::block_bits;

struct class_tables {
    std::array<unsigned, B + 1> width{};
    std::array<std::uint32_t, B + 2> first{};       // start of each class in `values`
    std::vector<std::uint16_t> values;              // 15-bit words grouped by class, ascending
    std::vector<std::uint16_t> offset_of;           // word -> index within its class

    class_tables() : values(1u << B), offset_of(1u << B) {
        std::array<std::uint32_t, B + 1> count{};
        for (std::uint32_t v = 0; v < (1u << B); ++v) ++count[static_cast<unsigned>(std::popcount(v))];
        for (unsigned c = 0; c <= B; ++c) {
            first[c + 1] = first[c] + count[c];
            width[c] = count[c] <= 1 ? 0 : static_cast<unsigned>(std::bit_width(count[c] - 1));
        }
        auto fill = first;
        for (std::uint32_t v = 0; v < (1u << B); ++v) {
            auto c = static_cast<unsigned>(std::popcount(v));
            offset_of[v] = static_cast<std::uint16_t>(fill[c] - first[c]);
            values[fill[c]++] = static_cast<std::uint16_t>(v);
        }
    }
};

const class_tables table_instance;

const class_tables& tables() { return table_instance; }

// Offset bits of the two blocks whose classes share a byte.
const std::array<std::uint8_t, 256> pair_width_table = [] {
    std::array<std::uint8_t, 256> out{};
    const auto& t = tables();
    for (unsigned b = 0; b < 256; ++b) out[b] = static_cast<std::uint8_t>(t.width[b & 0xf] + t.width[b >> 4]);
    return out;
}();

const std::array<std::uint8_t, 256>& pair_widths() { return pair_width_table; }

// Ones and offset bits of the 16 blocks described by one word of classes.
unsigned word_ones(std::uint64_t w) {
    std::uint64_t x = (w & 0x0f0f0f0f0f0f0f0fULL) + ((w >> 4) & 0x0f0f0f0f0f0f0f0fULL);
    return static_cast<unsigned>((x * 0x0101010101010101ULL) >> 56);
}

unsigned word_widths(std::uint64_t w) {
    const auto& pw = pair_widths();
    unsigned sum = 0;
    for (int k = 0; k < 8; ++k, w >>= 8) sum += pw[w & 0xff];
    return sum;
}

} // namespace

double binary_entropy_bits(std::size_t n, std::size_t m) {
    if (m == 0 || m == n) return 0.0;
    double dn = static_cast<double>(n), dm = static_cast<double>(m);
    return dm * std::log2(dn / dm) + (dn - dm) * std::log2(dn / (dn - dm));
}

compressed_bit_vector::compressed_bit_vector() { build_directory(); }

compressed_bit_vector::compressed_bit_vector(const bit_vector& bits) : n_(bits.size()) {
    const auto& t = tables();
    std::size_t n_blocks = (n_ + B - 1) / B;
    bit_builder cls(4 * n_blocks), off;
    auto words = bits.words();
    for (std::size_t b = 0; b < n_blocks; ++b) {
        std::size_t start = b * B;
        unsigned len = static_cast<unsigned>(std::min<std::size_t>(B, n_ - start));
        auto v = static_cast<std::uint32_t>(read_bits(words, start, len));
        auto c = static_cast<unsigned>(std::popcount(v));
        cls.append_bits(c, 4);
        off.append_bits(t.offset_of[v], t.width[c]);
    }
    offset_len_ = off.size();
    classes_ = std::move(cls).take_words();
    offsets_ = std::move(off).take_words();
    build_directory();
}

unsigned compressed_bit_vector::block_class(std::size_t b) const {
    return static_cast<unsigned>((classes_[b / 16] >> (4 * (b % 16))) & 0xf);
}

std::uint32_t compressed_bit_vector::decode_block(std::size_t b, std::size_t offset_pos) const {
    const auto& t = tables();
    unsigned c = block_class(b);
    auto idx = static_cast<std::uint32_t>(read_bits(offsets_, offset_pos, t.width[c]));
    return t.values[t.first[c] + idx];
}

void compressed_bit_vector::build_directory() {
    const auto& t = tables();
    std::size_t n_blocks = (n_ + B - 1) / B;
    std::size_t n_super = (n_blocks + blocks_per_superblock - 1) / blocks_per_superblock;
    sb_rank_.assign(n_super + 1, 0);
    sb_offset_.assign(n_super + 1, 0);
    select1_samples_.clear();
    select0_samples_.clear();

    std::size_t rank = 0, pos = 0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
        if (b % blocks_per_superblock == 0) {
            sb_rank_[b / blocks_per_superblock] = rank;
            sb_offset_[b / blocks_per_superblock] = pos;
        }
        unsigned c = block_class(b);
        rank += c;
        pos += t.width[c];
    }
    sb_rank_[n_super] = rank;
    sb_offset_[n_super] = pos;
    ones_ = rank;

    const std::size_t sb_bits = blocks_per_superblock * B;
    for (std::size_t s = 0, next = 1; s < n_super && next <= ones_; ++s)
        while (next <= ones_ && sb_rank_[s + 1] >= next) {
            select1_samples_.push_back(s);
            next += select_sample;
        }
    std::size_t zeros_total = n_ - ones_;
    for (std::size_t s = 0, next = 1; s < n_super && next <= zeros_total; ++s) {
        std::size_t zeros_end = std::min((s + 1) * sb_bits, n_) - sb_rank_[s + 1];
        while (next <= zeros_total && zeros_end >= next) {
            select0_samples_.push_back(s);
            next += select_sample;
        }
    }
}

bool compressed_bit_vector::access(std::size_t i) const {
    if (i == 0 || i > n_) throw std::out_of_range("compressed_bit_vector::access: position " + std::to_string(i));
    --i;
    std::size_t b = i / B;
    std::size_t s = b / blocks_per_superblock;
    std::size_t pos = sb_offset_[s];
    const auto& t = tables();
    std::size_t q = s * blocks_per_superblock;
    for (; q + 16 <= b; q += 16) pos += word_widths(classes_[q / 16]);
    for (; q < b; ++q) pos += t.width[block_class(q)];
    return (decode_block(b, pos) >> (i % B)) & 1u;
}

std::size_t compressed_bit_vector::rank1(std::size_t i) const {
    if (i > n_) throw std::out_of_range("compressed_bit_vector::rank: prefix " + std::to_string(i));
    std::size_t b = i / B;
    std::size_t s = b / blocks_per_superblock;
    std::size_t r = sb_rank_[s];
    std::size_t pos = sb_offset_[s];
    const auto& t = tables();
    std::size_t q = s * blocks_per_superblock;
    for (; q + 16 <= b; q += 16) {
        r += word_ones(classes_[q / 16]);
        pos += word_widths(classes_[q / 16]);
    }
    for (; q < b; ++q) {
        unsigned c = block_class(q);
        r += c;
        pos += t.width[c];
    }
    unsigned rem = static_cast<unsigned>(i % B);
    if (rem != 0) r += static_cast<std::size_t>(std::popcount(decode_block(b, pos) & ((1u << rem) - 1)));
    return r;
}

template <bool One>
std::size_t compressed_bit_vector::select_impl(std::size_t j) const {
    const std::size_t total = One ? ones_ : n_ - ones_;
    if (j == 0 || j > total)
        throw std::out_of_range("compressed_bit_vector::select: ordinal " + std::to_string(j) + " of " +
                                std::to_string(total));
    const std::size_t sb_bits = blocks_per_superblock * B;
    const auto& samples = One ? select1_samples_ : select0_samples_;
    auto before = [&](std::size_t s) -> std::size_t { return One ? sb_rank_[s] : s * sb_bits - sb_rank_[s]; };

    std::size_t k = (j - 1) / select_sample;
    std::size_t lo = samples[k];
    std::size_t hi = k + 1 < samples.size() ? samples[k + 1] : sb_rank_.size() - 2;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo + 1) / 2;
        if (before(mid) < j) lo = mid;
        else hi = mid - 1;
    }
    std::size_t s = lo;
    std::size_t r = j - before(s);  // 1-based ordinal inside the superblock
    std::size_t pos = sb_offset_[s];
    const auto& t = tables();
    std::size_t n_blocks = (n_ + B - 1) / B;
    std::size_t b = s * blocks_per_superblock;
    // Whole words of 16 full-length blocks first.
    for (; b + 16 < n_blocks; b += 16) {
        std::uint64_t w = classes_[b / 16];
        std::size_t ones = word_ones(w);
        std::size_t occ = One ? ones : 16 * B - ones;
        if (r <= occ) break;
        r -= occ;
        pos += word_widths(w);
    }
    for (; b < n_blocks; ++b) {
        unsigned c = block_class(b);
        std::size_t len = std::min<std::size_t>(B, n_ - b * B);
        std::size_t occ = One ? c : len - c;
        if (r <= occ) {
            std::uint32_t v = decode_block(b, pos);
            if (!One) v = ~v & ((1u << B) - 1);
            return b * B + select_in_word(v, static_cast<unsigned>(r - 1)) + 1;
        }
        r -= occ;
        pos += t.width[c];
    }
    throw std::logic_error("compressed_bit_vector::select: directory inconsistent");
}

std::size_t compressed_bit_vector::select1(std::size_t j) const { return select_impl<true>(j); }
std::size_t compressed_bit_vector::select0(std::size_t j) const { return select_impl<false>(j); }

compressed_bit_vector::space compressed_bit_vector::space_bits() const {
    space s;
    s.class_bits = 4 * ((n_ + B - 1) / B);
    s.offset_bits = offset_len_;
    s.directory_bits = 64 * (sb_rank_.size() + sb_offset_.size() + select1_samples_.size() + select0_samples_.size());
    return s;
}

void compressed_bit_vector::serialize(byte_writer& out) const {
    out.put_u8(static_cast<std::uint8_t>(blob_tag::compressed_bit_vector));
    out.put_u64(n_);
    out.put_u64(offset_len_);
    out.put_words(offsets_);
    out.put_words(classes_);
    out.put_words(sb_rank_);
    out.put_words(sb_offset_);
    out.put_words(select1_samples_);
    out.put_words(select0_samples_);
}

compressed_bit_vector compressed_bit_vector::deserialize(byte_reader& in) {
    if (in.get_u8() != static_cast<std::uint8_t>(blob_tag::compressed_bit_vector))
        throw format_error("expected compressed_bit_vector tag");
    compressed_bit_vector v;
    v.n_ = static_cast<std::size_t>(in.get_u64());
    v.offset_len_ = static_cast<std::size_t>(in.get_u64());
    v.offsets_ = in.get_words();
    v.classes_ = in.get_words();
    std::size_t n_blocks = (v.n_ + B - 1) / B;
    if (v.classes_.size() != (n_blocks + 15) / 16 || v.offsets_.size() != (v.offset_len_ + 63) / 64)
        throw format_error("compressed_bit_vector payload length mismatch");
    for (std::size_t b = 0; b < n_blocks; ++b) {
        std::size_t len = std::min<std::size_t>(B, v.n_ - b * B);
        if (v.block_class(b) > len) throw format_error("compressed_bit_vector class out of range");
    }
    v.build_directory();
    if (v.sb_offset_.back() != v.offset_len_) throw format_error("compressed_bit_vector offset stream mismatch");
    if (in.get_words() != v.sb_rank_ || in.get_words() != v.sb_offset_ || in.get_words() != v.select1_samples_ ||
        in.get_words() != v.select0_samples_)
        throw format_error("compressed_bit_vector directory does not match payload");
    return v;
}

} // namespace permc
