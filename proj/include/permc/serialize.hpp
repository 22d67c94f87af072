#pragma once

// Little-endian byte streams used by every structure's serializer.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permc/errors.hpp"

namespace permc {

class byte_writer {
public:
    void put_u8(std::uint8_t v) { buf_.push_back(v); }

    void put_u16(std::uint16_t v) {
        put_u8(static_cast<std::uint8_t>(v));
        put_u8(static_cast<std::uint8_t>(v >> 8));
    }

    void put_u64(std::uint64_t v) {
        for (int s = 0; s < 64; s += 8) put_u8(static_cast<std::uint8_t>(v >> s));
    }

    // u64 count followed by the words.
    void put_words(std::span<const std::uint64_t> words) {
        put_u64(words.size());
        for (auto w : words) put_u64(w);
    }

    void put_bytes(std::span<const std::uint8_t> bytes) {
        buf_.insert(buf_.end(), bytes.begin(), bytes.end());
    }

    // u64 length followed by the raw bytes.
    void put_blob(std::span<const std::uint8_t> bytes) {
        put_u64(bytes.size());
        put_bytes(bytes);
    }

    [[nodiscard]] const std::vector<std::uint8_t>& bytes() const& { return buf_; }
    [[nodiscard]] std::vector<std::uint8_t> bytes() && { return std::move(buf_); }
    [[nodiscard]] std::size_t size() const { return buf_.size(); }

private:
    std::vector<std::uint8_t> buf_;
};

class byte_reader {
public:
    explicit byte_reader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint16_t get_u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }

    std::uint64_t get_u64() {
        need(8);
        std::uint64_t v = 0;
        for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(data_[pos_ + k]) << (8 * k);
        pos_ += 8;
        return v;
    }

    std::vector<std::uint64_t> get_words() {
        auto count = get_u64();
        if (count > remaining() / 8) throw format_error("word section exceeds input");
        std::vector<std::uint64_t> out(count);
        for (auto& w : out) w = get_u64();
        return out;
    }

    std::span<const std::uint8_t> get_bytes(std::size_t len) {
        need(len);
        auto s = data_.subspan(pos_, len);
        pos_ += len;
        return s;
    }

    std::span<const std::uint8_t> get_blob() {
        auto len = get_u64();
        if (len > remaining()) throw format_error("blob exceeds input");
        return get_bytes(static_cast<std::size_t>(len));
    }

    [[nodiscard]] std::size_t remaining() const { return data_.size() - pos_; }
    [[nodiscard]] bool at_end() const { return pos_ == data_.size(); }

    void expect_end() const {
        if (!at_end()) throw format_error("trailing bytes after structure");
    }

private:
    void need(std::size_t k) const {
        if (data_.size() - pos_ < k) throw format_error("unexpected end of input");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

// Type tags written as the first byte of every tagged structure blob.
enum class blob_tag : std::uint8_t {
    bit_vector = 1,
    compressed_bit_vector = 2,
    wavelet_sequence = 3,
};

} // namespace permc
