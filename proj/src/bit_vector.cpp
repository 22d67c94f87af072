#include "permc/bit_vector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace permc {

namespace {

constexpr std::size_t words_per_superblock = bit_vector::superblock_bits / 64;

std::uint64_t low_mask(unsigned k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

} // namespace

void bit_builder::append_bits(std::uint64_t value, unsigned width) {
    if (width == 0) return;
    value &= low_mask(width);
    unsigned used = static_cast<unsigned>(n_ % 64);
    if (used == 0) words_.push_back(0);
    words_.back() |= value << used;
    if (used + width > 64) words_.push_back(value >> (64 - used));
    n_ += width;
}

std::uint64_t read_bits(std::span<const std::uint64_t> words, std::size_t pos, unsigned width) {
    if (width == 0) return 0;
    std::size_t w = pos / 64;
    unsigned off = static_cast<unsigned>(pos % 64);
    std::uint64_t v = words[w] >> off;
    if (off + width > 64) v |= words[w + 1] << (64 - off);
    return v & low_mask(width);
}

unsigned select_in_word(std::uint64_t w, unsigned r) {
    // Byte-wise prefix popcounts in one multiply, then a table inside the byte.
    static constexpr auto in_byte = [] {
        std::array<std::array<std::uint8_t, 8>, 256> t{};
        for (unsigned b = 0; b < 256; ++b)
            for (unsigned bit = 0, k = 0; bit < 8; ++bit)
                if (b >> bit & 1u) t[b][k++] = static_cast<std::uint8_t>(bit);
        return t;
    }();
    std::uint64_t s = w - ((w >> 1) & 0x5555555555555555ULL);
    s = (s & 0x3333333333333333ULL) + ((s >> 2) & 0x3333333333333333ULL);
    s = (s + (s >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
    std::uint64_t prefix = s * 0x0101010101010101ULL;  // byte k: ones in bytes 0..k
    unsigned byte = 0;
    while (((prefix >> (8 * byte)) & 0xff) <= r) ++byte;
    unsigned before = byte == 0 ? 0 : static_cast<unsigned>((prefix >> (8 * (byte - 1))) & 0xff);
    return 8 * byte + in_byte[(w >> (8 * byte)) & 0xff][r - before];
}

bit_vector::bit_vector(std::vector<std::uint64_t> words, std::size_t n) : words_(std::move(words)), n_(n) {
    words_.resize((n_ + 63) / 64);
    if (n_ % 64 != 0) words_.back() &= low_mask(static_cast<unsigned>(n_ % 64));
    build_directory();
}

bit_vector::bit_vector(std::span<const bool> bits) : n_(bits.size()) {
    words_.assign((n_ + 63) / 64, 0);
    for (std::size_t i = 0; i < n_; ++i)
        if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    build_directory();
}

bit_vector::bit_vector(const std::vector<bool>& bits) : n_(bits.size()) {
    words_.assign((n_ + 63) / 64, 0);
    for (std::size_t i = 0; i < n_; ++i)
        if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    build_directory();
}

bit_vector::bit_vector(bit_builder&& b) : n_(b.size()) {
    words_ = std::move(b).take_words();
    build_directory();
}

void bit_vector::build_directory() {
    std::size_t n_super = (words_.size() + words_per_superblock - 1) / words_per_superblock;
    counts_.assign(2 * (n_super + 1), 0);
    select1_samples_.clear();
    select0_samples_.clear();

    std::size_t total = 0;
    for (std::size_t s = 0; s < n_super; ++s) {
        counts_[2 * s] = total;
        std::uint64_t packed = 0;
        std::size_t rel = 0;
        for (std::size_t k = 0; k < words_per_superblock; ++k) {
            if (k > 0) packed |= static_cast<std::uint64_t>(rel) << (9 * (k - 1));
            std::size_t w = s * words_per_superblock + k;
            if (w < words_.size()) rel += static_cast<std::size_t>(std::popcount(words_[w]));
        }
        counts_[2 * s + 1] = packed;
        total += rel;
    }
    counts_[2 * n_super] = total;
    ones_ = total;

    // Superblock holding the ones numbered 1, 4097, 8193, ... Short vectors
    // skip the samples and binary search all superblocks.
    if (n_super <= 8) return;
    for (std::size_t s = 0, next = 1; s < n_super && next <= ones_; ++s) {
        while (next <= ones_ && counts_[2 * (s + 1)] >= next) {
            select1_samples_.push_back(s);
            next += select_sample;
        }
    }
    std::size_t zeros_total = n_ - ones_;
    for (std::size_t s = 0, next = 1; s < n_super && next <= zeros_total; ++s) {
        std::size_t zeros_end = std::min((s + 1) * superblock_bits, n_) - counts_[2 * (s + 1)];
        while (next <= zeros_total && zeros_end >= next) {
            select0_samples_.push_back(s);
            next += select_sample;
        }
    }
}

std::size_t bit_vector::relative_count(std::size_t superblock, std::size_t word_in_sb) const {
    if (word_in_sb == 0) return 0;
    return static_cast<std::size_t>((counts_[2 * superblock + 1] >> (9 * (word_in_sb - 1))) & 0x1ff);
}

bool bit_vector::access(std::size_t i) const {
    if (i == 0 || i > n_) throw std::out_of_range("bit_vector::access: position " + std::to_string(i));
    --i;
    return (words_[i / 64] >> (i % 64)) & 1u;
}

std::size_t bit_vector::rank1(std::size_t i) const {
    if (i > n_) throw std::out_of_range("bit_vector::rank: prefix " + std::to_string(i));
    std::size_t w = i / 64;
    std::size_t s = w / words_per_superblock;
    std::size_t r = counts_[2 * s] + relative_count(s, w % words_per_superblock);
    if (i % 64 != 0) r += static_cast<std::size_t>(std::popcount(words_[w] & low_mask(static_cast<unsigned>(i % 64))));
    return r;
}

template <bool One>
std::size_t bit_vector::select_impl(std::size_t j) const {
    const std::size_t total = One ? ones_ : n_ - ones_;
    if (j == 0 || j > total)
        throw std::out_of_range("bit_vector::select: ordinal " + std::to_string(j) + " of " + std::to_string(total));

    const auto& samples = One ? select1_samples_ : select0_samples_;
    auto before = [&](std::size_t s) -> std::size_t {  // occurrences before superblock s
        std::size_t c = counts_[2 * s];
        return One ? c : s * superblock_bits - c;
    };

    std::size_t k = (j - 1) / select_sample;
    std::size_t last = (counts_.size() / 2) - 2;
    std::size_t lo = samples.empty() ? 0 : samples[k];
    std::size_t hi = k + 1 < samples.size() ? samples[k + 1] : last;
    // Last superblock in [lo, hi] with fewer than j occurrences before it.
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo + 1) / 2;
        if (before(mid) < j) lo = mid;
        else hi = mid - 1;
    }
    std::size_t s = lo;
    std::size_t r = j - before(s) - 1;

    std::size_t k_word = 0;
    for (std::size_t q = 1; q < words_per_superblock; ++q) {
        std::size_t rel = relative_count(s, q);
        std::size_t occ = One ? rel : q * 64 - rel;
        if (occ <= r && s * words_per_superblock + q < words_.size()) k_word = q;
        else break;
    }
    std::size_t rel = relative_count(s, k_word);
    r -= One ? rel : k_word * 64 - rel;
    std::size_t w = s * words_per_superblock + k_word;
    std::uint64_t word = One ? words_[w] : ~words_[w];
    return w * 64 + select_in_word(word, static_cast<unsigned>(r)) + 1;
}

std::size_t bit_vector::select1(std::size_t j) const { return select_impl<true>(j); }
std::size_t bit_vector::select0(std::size_t j) const { return select_impl<false>(j); }

std::size_t bit_vector::directory_bits() const {
    return 64 * (counts_.size() + select1_samples_.size() + select0_samples_.size());
}

void bit_vector::serialize(byte_writer& out) const {
    out.put_u8(static_cast<std::uint8_t>(blob_tag::bit_vector));
    out.put_u64(n_);
    out.put_words(words_);
    out.put_words(counts_);
    out.put_words(select1_samples_);
    out.put_words(select0_samples_);
}

bit_vector bit_vector::deserialize(byte_reader& in) {
    if (in.get_u8() != static_cast<std::uint8_t>(blob_tag::bit_vector)) throw format_error("expected bit_vector tag");
    auto n = in.get_u64();
    auto words = in.get_words();
    if (words.size() != (n + 63) / 64) throw format_error("bit_vector payload length mismatch");
    if (n % 64 != 0 && (words.back() & ~low_mask(static_cast<unsigned>(n % 64))) != 0)
        throw format_error("bit_vector padding bits set");
    bit_vector v(std::move(words), static_cast<std::size_t>(n));
    // Directories are derived data; the stored copy must match a rebuild.
    if (in.get_words() != v.counts_ || in.get_words() != v.select1_samples_ || in.get_words() != v.select0_samples_)
        throw format_error("bit_vector directory does not match payload");
    return v;
}

} // namespace permc
