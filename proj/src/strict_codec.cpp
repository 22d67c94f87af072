#include "permc/strict_codec.hpp"

#include <stdexcept>
#include <string>

#include "permc/analysis.hpp"
#include "permc/errors.hpp"

namespace permc {

namespace {

enum section_tag : std::uint8_t { header = 1, marks = 2, value_marks = 3, collapsed = 4 };

} // namespace

strict_codec strict_codec::encode(const permutation& pi, bool compressed_marks, bool compressed_inner) {
    strict_codec c;
    c.n_ = pi.size();
    auto v = pi.values();
    std::vector<bool> r(c.n_, false), rinv(c.n_, false);
    for (std::size_t i = 0; i < c.n_; ++i) {
        if (i == 0 || v[i] != v[i - 1] + 1) {
            r[i] = true;
            rinv[v[i] - 1] = true;
        }
    }
    c.heads_ = bitmap(r, compressed_marks);
    c.head_values_ = bitmap(rinv, compressed_marks);

    const std::size_t m = c.heads_.ones();
    std::vector<std::size_t> collapsed_values(m);
    for (std::size_t k = 1; k <= m; ++k) collapsed_values[k - 1] = c.head_values_.rank1(pi(c.heads_.select1(k)));
    c.inner_ = runs_codec::encode(permutation(std::move(collapsed_values)), compressed_inner);
    return c;
}

void strict_codec::check_position(std::size_t i, const char* op) const {
    if (i == 0 || i > n_)
        throw std::out_of_range(std::string("strict_codec::") + op + ": index " + std::to_string(i) + " outside [1," +
                                std::to_string(n_) + "]");
}

std::size_t strict_codec::apply(std::size_t i) const {
    check_position(i, "apply");
    std::size_t run = heads_.rank1(i);
    std::size_t head_value = head_values_.select1(inner_.apply(run));
    return head_value + i - heads_.select1(run);
}

std::size_t strict_codec::inverse(std::size_t i) const {
    check_position(i, "inverse");
    std::size_t run = head_values_.rank1(i);
    std::size_t head_pos = heads_.select1(inner_.inverse(run));
    return head_pos + i - head_values_.select1(run);
}

permutation strict_codec::decode() const {
    std::vector<std::size_t> v(n_);
    for (std::size_t i = 1; i <= n_; ++i) v[i - 1] = apply(i);
    return permutation(std::move(v));
}

space_breakdown strict_codec::size_in_bits() const {
    space_breakdown s = inner_.size_in_bits();
    s.payload += heads_.payload_bits() + head_values_.payload_bits();
    s.directories += heads_.directory_bits() + head_values_.directory_bits();
    s.pointers += 64;
    return s;
}

container strict_codec::to_container() const {
    container c(structure_tag::strict_codec);
    byte_writer h;
    h.put_u64(n_);
    h.put_u64(strict_run_count());
    c.add(header, std::move(h).bytes());
    byte_writer r;
    heads_.serialize(r);
    c.add(marks, std::move(r).bytes());
    byte_writer ri;
    head_values_.serialize(ri);
    c.add(value_marks, std::move(ri).bytes());
    c.add(collapsed, inner_.to_container().to_bytes());
    return c;
}

strict_codec strict_codec::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {header, marks, value_marks, collapsed};
    c.expect(structure_tag::strict_codec, allowed);
    strict_codec out;
    byte_reader h(c.get(header));
    out.n_ = static_cast<std::size_t>(h.get_u64());
    auto m = h.get_u64();
    h.expect_end();

    byte_reader r(c.get(marks));
    out.heads_ = bitmap::deserialize(r);
    r.expect_end();
    byte_reader ri(c.get(value_marks));
    out.head_values_ = bitmap::deserialize(ri);
    ri.expect_end();
    out.inner_ = runs_codec::from_container(container::from_bytes(c.get(collapsed)));

    if (out.heads_.size() != out.n_ || out.head_values_.size() != out.n_)
        throw format_error("strict_codec: mark bitmaps do not have length n");
    if (out.heads_.ones() != m || out.head_values_.ones() != m || out.inner_.size() != m)
        throw format_error("strict_codec: strict run count mismatch");
    if (out.n_ > 0 && (!out.heads_.access(1) || !out.head_values_.access(1)))
        throw format_error("strict_codec: first position or value is not a run head");
    return out;
}

} // namespace permc
