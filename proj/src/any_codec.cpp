#include "permc/any_codec.hpp"

#include "permc/errors.hpp"

namespace permc {

std::string to_string(codec_kind k) {
    switch (k) {
    case codec_kind::runs: return "runs";
    case codec_kind::strict: return "strict";
    case codec_kind::sus: return "sus";
    }
    return "unknown";
}

std::optional<codec_kind> parse_codec_kind(const std::string& name) {
    if (name == "runs") return codec_kind::runs;
    if (name == "strict") return codec_kind::strict;
    if (name == "sus") return codec_kind::sus;
    return std::nullopt;
}

any_codec any_codec::encode(const permutation& pi, codec_kind kind, bool compressed) {
    switch (kind) {
    case codec_kind::runs: return runs_codec::encode(pi, compressed);
    case codec_kind::strict: return strict_codec::encode(pi, true, compressed);
    case codec_kind::sus: return sus_codec::encode(pi, true, compressed);
    }
    throw validation_error("unknown codec kind");
}

std::size_t any_codec::size() const {
    return std::visit([](const auto& c) { return c.size(); }, rep_);
}

std::size_t any_codec::apply(std::size_t i) const {
    return std::visit([i](const auto& c) { return c.apply(i); }, rep_);
}

std::size_t any_codec::inverse(std::size_t i) const {
    return std::visit([i](const auto& c) { return c.inverse(i); }, rep_);
}

permutation any_codec::decode() const {
    return std::visit([](const auto& c) { return c.decode(); }, rep_);
}

space_breakdown any_codec::size_in_bits() const {
    return std::visit([](const auto& c) { return c.size_in_bits(); }, rep_);
}

container any_codec::to_container() const {
    return std::visit([](const auto& c) { return c.to_container(); }, rep_);
}

any_codec any_codec::from_container(const container& c) {
    switch (c.kind()) {
    case structure_tag::runs_codec: return runs_codec::from_container(c);
    case structure_tag::strict_codec: return strict_codec::from_container(c);
    case structure_tag::sus_codec: return sus_codec::from_container(c);
    default: throw format_error("container holds " + to_string(c.kind()) + ", not a permutation codec");
    }
}

} // namespace permc
