#include "permc/sus_codec.hpp"

#include <stdexcept>
#include <string>

#include "permc/errors.hpp"

namespace permc {

namespace {

enum section_tag : std::uint8_t { header = 1, label_sequence = 2, offsets = 3, concatenated = 4 };

} // namespace

sus_codec sus_codec::encode(const permutation& pi, bool compressed_labels, bool compressed_inner) {
    sus_codec c;
    auto part = partition_sus(pi);
    const std::size_t n = pi.size(), sigma = part.count();
    c.labels_ = wavelet_sequence(part.labels, sigma, compressed_labels);

    std::vector<std::size_t> first(sigma + 1, 0);
    for (std::size_t l = 0; l < sigma; ++l) first[l + 1] = first[l] + part.lengths[l];
    std::vector<bool> marks(n, false);
    for (std::size_t l = 0; l < sigma; ++l) marks[first[l]] = true;
    c.starts_ = bit_vector(marks);

    std::vector<std::size_t> concat(n);
    for (std::size_t i = 0; i < n; ++i) concat[first[part.labels[i] - 1]++] = pi.values()[i];
    c.inner_ = runs_codec::encode(permutation(std::move(concat)), compressed_inner);
    return c;
}

void sus_codec::check_position(std::size_t i, const char* op) const {
    if (i == 0 || i > size())
        throw std::out_of_range(std::string("sus_codec::") + op + ": index " + std::to_string(i) + " outside [1," +
                                std::to_string(size()) + "]");
}

std::size_t sus_codec::apply(std::size_t i) const {
    check_position(i, "apply");
    std::size_t l = labels_.access(i);
    return inner_.apply(offset(l) + labels_.rank(l, i));
}

std::size_t sus_codec::inverse(std::size_t i) const {
    check_position(i, "inverse");
    std::size_t p = inner_.inverse(i);
    std::size_t l = starts_.rank1(p);
    return labels_.select(l, p - offset(l));
}

permutation sus_codec::decode() const {
    std::vector<std::size_t> v(size());
    for (std::size_t i = 1; i <= size(); ++i) v[i - 1] = apply(i);
    return permutation(std::move(v));
}

space_breakdown sus_codec::size_in_bits() const {
    space_breakdown s = inner_.size_in_bits();
    s.payload += labels_.payload_bits() + starts_.payload_bits();
    s.directories += labels_.directory_bits() + starts_.directory_bits();
    s.pointers += 2 * 64;
    return s;
}

container sus_codec::to_container() const {
    container c(structure_tag::sus_codec);
    byte_writer h;
    h.put_u64(size());
    h.put_u64(sus_count());
    c.add(header, std::move(h).bytes());
    byte_writer s;
    labels_.serialize(s);
    c.add(label_sequence, std::move(s).bytes());
    byte_writer a;
    starts_.serialize(a);
    c.add(offsets, std::move(a).bytes());
    c.add(concatenated, inner_.to_container().to_bytes());
    return c;
}

sus_codec sus_codec::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {header, label_sequence, offsets, concatenated};
    c.expect(structure_tag::sus_codec, allowed);
    sus_codec out;
    byte_reader h(c.get(header));
    auto n = h.get_u64();
    auto sigma = h.get_u64();
    h.expect_end();

    byte_reader s(c.get(label_sequence));
    out.labels_ = wavelet_sequence::deserialize(s);
    s.expect_end();
    byte_reader a(c.get(offsets));
    out.starts_ = bit_vector::deserialize(a);
    a.expect_end();
    out.inner_ = runs_codec::from_container(container::from_bytes(c.get(concatenated)));

    if (out.labels_.size() != n || out.starts_.size() != n || out.inner_.size() != n)
        throw format_error("sus_codec: component lengths do not match n");
    if (out.labels_.alphabet() != sigma || out.starts_.ones() != sigma)
        throw format_error("sus_codec: label count mismatch");
    for (std::size_t l = 1; l <= sigma; ++l) {
        std::size_t len = (l < sigma ? out.starts_.select1(l + 1) : n + 1) - out.starts_.select1(l);
        if (out.labels_.rank(l, n) != len) throw format_error("sus_codec: upsequence length mismatch");
    }
    return out;
}

} // namespace permc
