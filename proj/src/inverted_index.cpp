#include "permc/inverted_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permc/errors.hpp"

namespace permc {

namespace {

enum section_tag : std::uint8_t { header = 1, list_offsets = 2, postings = 3 };

} // namespace

inverted_index inverted_index::build(std::span<const std::size_t> text, bool compressed) {
    if (text.empty()) throw validation_error("inverted_index: empty text");
    std::size_t rho = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == 0) throw validation_error("inverted_index: word id 0 at position " + std::to_string(p + 1));
        rho = std::max(rho, text[p]);
    }
    if (rho > text.size())
        throw validation_error("inverted_index: word ids are not dense (largest id " + std::to_string(rho) +
                               " exceeds text length)");
    std::vector<std::size_t> count(rho, 0);
    for (auto w : text) ++count[w - 1];
    for (std::size_t w = 0; w < rho; ++w)
        if (count[w] == 0) throw validation_error("inverted_index: word id " + std::to_string(w + 1) + " never occurs");

    inverted_index out;
    out.starts_.assign(rho + 1, 1);
    for (std::size_t w = 0; w < rho; ++w) out.starts_[w + 1] = out.starts_[w] + count[w];
    std::vector<std::size_t> pi(text.size());
    auto next = out.starts_;
    for (std::size_t p = 0; p < text.size(); ++p) pi[next[text[p] - 1]++ - 1] = p + 1;
    out.codec_ = runs_codec::encode_blocks(permutation(std::move(pi)), count, compressed);
    return out;
}

void inverted_index::check_word(std::size_t w, const char* op) const {
    if (w == 0 || w > vocabulary())
        throw std::out_of_range(std::string("inverted_index::") + op + ": word " + std::to_string(w) + " outside [1," +
                                std::to_string(vocabulary()) + "]");
}

std::size_t inverted_index::list_length(std::size_t w) const {
    check_word(w, "list_length");
    return starts_[w] - starts_[w - 1];
}

std::size_t inverted_index::occurrence(std::size_t w, std::size_t j) const {
    if (j == 0 || j > list_length(w))
        throw std::out_of_range("inverted_index::occurrence: word " + std::to_string(w) + " has " +
                                std::to_string(list_length(w)) + " occurrences, asked for " + std::to_string(j));
    return codec_.apply(starts_[w - 1] + j - 1);
}

std::size_t inverted_index::access(std::size_t p) const {
    std::size_t off = codec_.inverse(p);
    auto it = std::upper_bound(starts_.begin(), starts_.end(), off);
    return static_cast<std::size_t>(it - starts_.begin());
}

std::vector<std::size_t> inverted_index::range(std::size_t w, std::size_t j, std::size_t len) const {
    std::size_t have = list_length(w);
    if (j == 0 || len == 0 || j > have || len > have - j + 1)
        throw std::out_of_range("inverted_index::range: occurrences " + std::to_string(j) + ".." +
                                std::to_string(j + len - 1) + " outside the list of word " + std::to_string(w));
    std::size_t first = starts_[w - 1] + j - 1;
    return codec_.apply_range(first, first + len - 1);
}

std::optional<std::size_t> inverted_index::successor(std::size_t w, std::size_t x) const {
    check_word(w, "successor");
    auto hit = codec_.run_successor(w, x);
    if (!hit) return std::nullopt;
    return hit->value;
}

std::vector<std::size_t> inverted_index::intersect(std::size_t w1, std::size_t w2, std::size_t shift) const {
    check_word(w1, "intersect");
    check_word(w2, "intersect");
    std::vector<std::size_t> out;
    std::size_t cursor = 0;
    for (;;) {
        auto a = successor(w1, cursor);
        if (!a || *a + shift > size()) break;
        auto b = successor(w2, *a + shift - 1);
        if (!b) break;
        if (*b == *a + shift) {
            out.push_back(*a);
            cursor = *a;
        } else {
            cursor = *b - shift - 1;
        }
    }
    return out;
}

std::vector<std::size_t> inverted_index::text() const {
    std::vector<std::size_t> t(size());
    for (std::size_t w = 1; w <= vocabulary(); ++w)
        for (auto p : codec_.apply_range(starts_[w - 1], starts_[w] - 1)) t[p - 1] = w;
    return t;
}

space_breakdown inverted_index::size_in_bits() const {
    space_breakdown s = codec_.size_in_bits();
    s.pointers += 64 * starts_.size();
    return s;
}

container inverted_index::to_container() const {
    container c(structure_tag::inverted_index);
    byte_writer h;
    h.put_u64(size());
    h.put_u64(vocabulary());
    c.add(header, std::move(h).bytes());
    byte_writer v;
    v.put_words(std::vector<std::uint64_t>(starts_.begin(), starts_.end()));
    c.add(list_offsets, std::move(v).bytes());
    c.add(postings, codec_.to_container().to_bytes());
    return c;
}

inverted_index inverted_index::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {header, list_offsets, postings};
    c.expect(structure_tag::inverted_index, allowed);
    inverted_index out;
    byte_reader h(c.get(header));
    auto n = h.get_u64();
    auto rho = h.get_u64();
    h.expect_end();
    byte_reader v(c.get(list_offsets));
    auto words = v.get_words();
    v.expect_end();
    out.starts_.assign(words.begin(), words.end());
    out.codec_ = runs_codec::from_container(container::from_bytes(c.get(postings)));

    if (out.starts_.size() != rho + 1 || out.codec_.size() != n || out.codec_.run_count() != rho)
        throw format_error("inverted_index: component sizes do not match");
    if (rho == 0 || out.starts_.front() != 1) throw format_error("inverted_index: bad list offsets");
    for (std::size_t w = 1; w <= rho; ++w)
        if (out.starts_[w] <= out.starts_[w - 1] || out.codec_.run_start(w) != out.starts_[w - 1])
            throw format_error("inverted_index: list offsets disagree with the posting runs");
    if (out.starts_.back() != n + 1) throw format_error("inverted_index: list offsets do not end at n + 1");
    return out;
}

} // namespace permc
