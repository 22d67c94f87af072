#include "permc/container.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "permc/errors.hpp"

namespace permc {

namespace {

constexpr std::uint8_t magic[4] = {'P', 'C', 'P', 'M'};
constexpr std::size_t header_bytes = 4 + 2 + 1 + 8;
constexpr std::size_t entry_bytes = 1 + 8 + 8;

bool known_kind(std::uint8_t t) { return t >= 1 && t <= 7; }

} // namespace

std::string to_string(structure_tag tag) {
    switch (tag) {
    case structure_tag::runs_codec: return "runs";
    case structure_tag::strict_codec: return "strict";
    case structure_tag::sus_codec: return "sus";
    case structure_tag::cycle_codec: return "cycles";
    case structure_tag::int_function: return "function";
    case structure_tag::inverted_index: return "invidx";
    case structure_tag::csa_index: return "csa";
    }
    return "unknown";
}

void container::add(std::uint8_t tag, std::vector<std::uint8_t> bytes) {
    sections_.push_back(section{tag, std::move(bytes)});
}

const std::vector<std::uint8_t>& container::get(std::uint8_t tag) const {
    for (const auto& s : sections_)
        if (s.tag == tag) return s.bytes;
    throw format_error("missing section " + std::to_string(tag) + " in " + to_string(kind_) + " container");
}

void container::expect(structure_tag expected, std::span<const std::uint8_t> allowed) const {
    if (kind_ != expected)
        throw format_error("container holds " + to_string(kind_) + ", expected " + to_string(expected));
    std::vector<std::uint8_t> seen;
    for (const auto& s : sections_) {
        if (std::find(allowed.begin(), allowed.end(), s.tag) == allowed.end())
            throw format_error("unknown section tag " + std::to_string(s.tag) + " in " + to_string(kind_) + " container");
        if (std::find(seen.begin(), seen.end(), s.tag) != seen.end())
            throw format_error("duplicate section tag " + std::to_string(s.tag));
        seen.push_back(s.tag);
    }
}

std::vector<std::uint8_t> container::to_bytes() const {
    byte_writer out;
    for (auto m : magic) out.put_u8(m);
    out.put_u16(version);
    out.put_u8(static_cast<std::uint8_t>(kind_));
    out.put_u64(sections_.size());
    std::uint64_t offset = header_bytes + entry_bytes * sections_.size();
    for (const auto& s : sections_) {
        out.put_u8(s.tag);
        out.put_u64(offset);
        out.put_u64(s.bytes.size());
        offset += s.bytes.size();
    }
    for (const auto& s : sections_) out.put_bytes(s.bytes);
    return std::move(out).bytes();
}

container container::from_bytes(std::span<const std::uint8_t> bytes) {
    byte_reader in(bytes);
    for (auto m : magic)
        if (in.get_u8() != m) throw format_error("bad magic: not a PCPM container");
    auto ver = in.get_u16();
    if (ver != version) throw format_error("unsupported container version " + std::to_string(ver));
    auto kind = in.get_u8();
    if (!known_kind(kind)) throw format_error("unknown structure tag " + std::to_string(kind));
    auto count = in.get_u64();
    if (count > in.remaining() / entry_bytes) throw format_error("section table exceeds input");
    container c(static_cast<structure_tag>(kind));
    std::uint64_t expected_offset = header_bytes + entry_bytes * count;
    for (std::uint64_t k = 0; k < count; ++k) {
        auto tag = in.get_u8();
        auto off = in.get_u64();
        auto len = in.get_u64();
        // Sections are laid out back to back in table order.
        if (off != expected_offset || len > bytes.size() || off > bytes.size() - len)
            throw format_error("section " + std::to_string(tag) + " has an invalid extent");
        c.sections_.push_back(section{tag, std::vector<std::uint8_t>(bytes.begin() + static_cast<std::ptrdiff_t>(off),
                                                                     bytes.begin() + static_cast<std::ptrdiff_t>(off + len))});
        expected_offset += len;
    }
    if (expected_offset != bytes.size()) throw format_error("trailing bytes after last section");
    return c;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("write failed for " + path);
}

} // namespace permc
