#pragma once

// File container shared by every serialized structure:
//
//   "PCPM"  u16 version  u8 structure tag  u64 section count
//   per section: u8 tag, u64 byte offset (from file start), u64 byte length
//   section payloads
//
// All integers little-endian. Unknown structure tags, versions or section
// tags raise format_error.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permc/serialize.hpp"

namespace permc {

enum class structure_tag : std::uint8_t {
    runs_codec = 1,
    strict_codec = 2,
    sus_codec = 3,
    cycle_codec = 4,
    int_function = 5,
    inverted_index = 6,
    csa_index = 7,
};

std::string to_string(structure_tag tag);

class container {
public:
    static constexpr std::uint16_t version = 1;

    struct section {
        std::uint8_t tag = 0;
        std::vector<std::uint8_t> bytes;
    };

    explicit container(structure_tag kind) : kind_(kind) {}

    [[nodiscard]] structure_tag kind() const { return kind_; }
    void add(std::uint8_t tag, std::vector<std::uint8_t> bytes);
    [[nodiscard]] const std::vector<std::uint8_t>& get(std::uint8_t tag) const;
    [[nodiscard]] const std::vector<section>& sections() const { return sections_; }

    // Throws format_error unless kind() == expected and every section tag is
    // one of `allowed` (each at most once).
    void expect(structure_tag expected, std::span<const std::uint8_t> allowed) const;

    [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;
    static container from_bytes(std::span<const std::uint8_t> bytes);

private:
    structure_tag kind_;
    std::vector<section> sections_;
};

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace permc
