#pragma once

// Compressed suffix array over Psi, where A[Psi(i)] = (A[i] mod n) + 1 for
// the suffix array A of T$ (n counts the terminator). Psi increases inside
// each first-symbol interval, so it has at most sigma_A runs and is stored
// in a permutation codec. Text positions 1, 1 + s, 1 + 2s, ... are sampled
// for locate and extract.
//
// Bytes b map to symbols b + 1; the terminator is symbol 0.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permc/any_codec.hpp"
#include "permc/bit_vector.hpp"
#include "permc/container.hpp"

namespace permc {

class csa_index {
public:
    using symbol = std::uint16_t;

    csa_index() = default;

    // sample = 0 picks ceil(lg n). Throws validation_error on empty text.
    static csa_index build(std::string_view text, std::size_t sample = 0, codec_kind psi_codec = codec_kind::runs);

    [[nodiscard]] std::size_t size() const { return mark_.size(); }
    [[nodiscard]] std::size_t sample_rate() const { return sample_; }
    [[nodiscard]] std::size_t alphabet_size() const { return symbols_.size(); }
    [[nodiscard]] const any_codec& codec() const { return psi_; }

    [[nodiscard]] std::size_t psi(std::size_t i) const { return psi_.apply(i); }
    [[nodiscard]] std::size_t psi_inverse(std::size_t i) const { return psi_.inverse(i); }
    // First symbol of the suffix at row i.
    [[nodiscard]] symbol symbol_at_row(std::size_t i) const;

    [[nodiscard]] std::size_t count(std::string_view pattern) const;
    [[nodiscard]] std::vector<std::size_t> locate(std::string_view pattern) const;
    // Pattern given as symbols (0 is the terminator).
    [[nodiscard]] std::size_t count_symbols(std::span<const symbol> pattern) const;
    [[nodiscard]] std::vector<std::size_t> locate_symbols(std::span<const symbol> pattern) const;
    // Text position of the suffix at row i.
    [[nodiscard]] std::size_t locate_row(std::size_t i) const;

    // Symbols of T$ at positions l..r (1-based, r <= n).
    [[nodiscard]] std::vector<symbol> extract(std::size_t l, std::size_t r) const;
    // Bytes of T$ at positions l..r with the terminator dropped.
    [[nodiscard]] std::string extract_text(std::size_t l, std::size_t r) const;

    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    static csa_index from_container(const container& c);

private:
    // Rows [lo, hi) whose suffixes start with the pattern.
    [[nodiscard]] std::pair<std::size_t, std::size_t> interval(std::span<const symbol> pattern) const;
    // <0, 0, >0 as the suffix at row i compares to the pattern, where a
    // suffix that starts with the pattern compares equal.
    [[nodiscard]] int compare_row(std::size_t i, std::span<const symbol> pattern) const;

    std::size_t sample_ = 1;
    any_codec psi_;
    std::vector<symbol> symbols_;     // distinct symbols, increasing
    std::vector<std::size_t> first_;  // first row of each symbol, plus n + 1
    bit_vector mark_;                 // rows whose text position is sampled
    std::vector<std::size_t> row_samples_;   // text position of each marked row, in row order
    std::vector<std::size_t> text_samples_;  // row of text position 1 + k * sample
};

std::vector<csa_index::symbol> to_symbols(std::string_view bytes);

} // namespace permc
