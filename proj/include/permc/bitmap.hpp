#pragma once

// A rank/select bitmap that is either plain or compressed, chosen at build
// time. Codecs hold their node bitmaps through this type.

#include <cstddef>
#include <variant>
#include <vector>

#include "permc/bit_vector.hpp"
#include "permc/compressed_bit_vector.hpp"

namespace permc {

class bitmap {
private:
    template <typename F>
    decltype(auto) visit(F&& f) const {
        if (const auto* p = std::get_if<bit_vector>(&rep_)) return f(*p);
        return f(std::get<compressed_bit_vector>(rep_));
    }

    std::variant<bit_vector, compressed_bit_vector> rep_;

public:
    bitmap() = default;
    bitmap(bit_vector v) : rep_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    bitmap(compressed_bit_vector v) : rep_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    bitmap(bit_builder&& b, bool compressed) {
        bit_vector plain(std::move(b));
        if (compressed) rep_ = compressed_bit_vector(plain);
        else rep_ = std::move(plain);
    }
    bitmap(const std::vector<bool>& bits, bool compressed) {
        bit_vector plain(bits);
        if (compressed) rep_ = compressed_bit_vector(plain);
        else rep_ = std::move(plain);
    }

    [[nodiscard]] bool compressed() const { return rep_.index() == 1; }

    [[nodiscard]] std::size_t size() const { return visit([](const auto& v) { return v.size(); }); }
    [[nodiscard]] std::size_t ones() const { return visit([](const auto& v) { return v.ones(); }); }
    [[nodiscard]] std::size_t zeros() const { return visit([](const auto& v) { return v.zeros(); }); }
    [[nodiscard]] bool access(std::size_t i) const { return visit([i](const auto& v) { return v.access(i); }); }
    [[nodiscard]] std::size_t rank1(std::size_t i) const { return visit([i](const auto& v) { return v.rank1(i); }); }
    [[nodiscard]] std::size_t rank0(std::size_t i) const { return i - rank1(i); }
    [[nodiscard]] std::size_t rank(bool c, std::size_t i) const { return c ? rank1(i) : rank0(i); }
    [[nodiscard]] std::size_t select1(std::size_t j) const { return visit([j](const auto& v) { return v.select1(j); }); }
    [[nodiscard]] std::size_t select0(std::size_t j) const { return visit([j](const auto& v) { return v.select0(j); }); }
    [[nodiscard]] std::size_t select(bool c, std::size_t j) const { return c ? select1(j) : select0(j); }

    [[nodiscard]] std::size_t payload_bits() const { return visit([](const auto& v) { return v.payload_bits(); }); }
    [[nodiscard]] std::size_t directory_bits() const { return visit([](const auto& v) { return v.directory_bits(); }); }

    void serialize(byte_writer& out) const {
        visit([&out](const auto& v) { v.serialize(out); });
    }

    static bitmap deserialize(byte_reader& in) {
        // Peek at the tag without consuming it.
        byte_reader probe = in;
        auto tag = static_cast<blob_tag>(probe.get_u8());
        if (tag == blob_tag::bit_vector) return bitmap(bit_vector::deserialize(in));
        if (tag == blob_tag::compressed_bit_vector) return bitmap(compressed_bit_vector::deserialize(in));
        throw format_error("unknown bitmap tag");
    }

};

} // namespace permc
