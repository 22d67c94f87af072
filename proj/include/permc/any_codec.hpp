#pragma once

// One of the three permutation codecs, chosen at run time.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "permc/runs_codec.hpp"
#include "permc/strict_codec.hpp"
#include "permc/sus_codec.hpp"

namespace permc {

enum class codec_kind { runs, strict, sus };

std::string to_string(codec_kind k);
std::optional<codec_kind> parse_codec_kind(const std::string& name);

class any_codec {
public:
    any_codec() = default;
    any_codec(runs_codec c) : rep_(std::move(c)) {}    // NOLINT(google-explicit-constructor)
    any_codec(strict_codec c) : rep_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
    any_codec(sus_codec c) : rep_(std::move(c)) {}     // NOLINT(google-explicit-constructor)

    // `compressed` selects compressed bitmaps for the runs codec (and the
    // inner runs codec of the other two).
    static any_codec encode(const permutation& pi, codec_kind kind, bool compressed = false);

    [[nodiscard]] codec_kind kind() const { return static_cast<codec_kind>(rep_.index()); }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::size_t apply(std::size_t i) const;
    [[nodiscard]] std::size_t inverse(std::size_t i) const;
    [[nodiscard]] permutation decode() const;
    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    // Accepts a runs, strict or sus container.
    static any_codec from_container(const container& c);

    template <typename C>
    [[nodiscard]] const C* get_if() const {
        return std::get_if<C>(&rep_);
    }

private:
    std::variant<runs_codec, strict_codec, sus_codec> rep_;
};

} // namespace permc
