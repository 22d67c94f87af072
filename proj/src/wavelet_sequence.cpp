#include "permc/wavelet_sequence.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "permc/errors.hpp"

namespace permc {

wavelet_sequence::wavelet_sequence(std::span<const std::size_t> symbols, std::size_t alphabet, bool compressed)
    : n_(symbols.size()), r_(alphabet) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] < 1 || symbols[i] > r_)
            throw validation_error("wavelet_sequence: symbol " + std::to_string(symbols[i]) + " at position " +
                                   std::to_string(i + 1) + " outside [1," + std::to_string(r_) + "]");
    if (r_ > 1) {
        std::vector<std::size_t> seq(symbols.begin(), symbols.end());
        build(seq, 1, r_, compressed);
    }
}

std::int64_t wavelet_sequence::build(std::vector<std::size_t>& seq, std::size_t lo, std::size_t hi, bool compressed) {
    if (lo == hi) return -1;
    auto id = static_cast<std::int64_t>(nodes_.size());
    nodes_.push_back(node{lo, hi, -1, -1, {}});
    std::size_t mid = lo + (hi - lo) / 2;
    bit_builder b(seq.size());
    std::vector<std::size_t> left, right;
    for (auto c : seq) {
        bool goes_right = c > mid;
        b.push_back(goes_right);
        (goes_right ? right : left).push_back(c);
    }
    nodes_[id].bits = bitmap(std::move(b), compressed);
    seq.clear();
    seq.shrink_to_fit();
    auto l = build(left, lo, mid, compressed);
    auto r = build(right, mid + 1, hi, compressed);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
}

std::int64_t wavelet_sequence::shape(std::size_t lo, std::size_t hi) {
    if (lo == hi) return -1;
    auto id = static_cast<std::int64_t>(nodes_.size());
    nodes_.push_back(node{lo, hi, -1, -1, {}});
    std::size_t mid = lo + (hi - lo) / 2;
    auto l = shape(lo, mid);
    auto r = shape(mid + 1, hi);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
}

std::size_t wavelet_sequence::depth() const {
    return r_ <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(r_ - 1));
}

std::size_t wavelet_sequence::access(std::size_t i) const {
    if (i == 0 || i > n_) throw std::out_of_range("wavelet_sequence::access: position " + std::to_string(i));
    if (r_ <= 1) return 1;
    std::int64_t v = 0;
    for (;;) {
        const auto& nd = nodes_[v];
        bool b = nd.bits.access(i);
        i = nd.bits.rank(b, i);
        std::int64_t next = b ? nd.right : nd.left;
        if (next < 0) return b ? nd.lo + (nd.hi - nd.lo) / 2 + 1 : nd.lo;
        v = next;
    }
}

std::size_t wavelet_sequence::rank(std::size_t c, std::size_t i) const {
    if (i > n_) throw std::out_of_range("wavelet_sequence::rank: prefix " + std::to_string(i));
    if (c < 1 || c > r_) return 0;
    if (r_ == 1) return i;
    std::int64_t v = 0;
    while (v >= 0 && i > 0) {
        const auto& nd = nodes_[v];
        bool b = c > nd.lo + (nd.hi - nd.lo) / 2;
        i = nd.bits.rank(b, i);
        v = b ? nd.right : nd.left;
    }
    return i;
}

std::size_t wavelet_sequence::select(std::size_t c, std::size_t j) const {
    if (c < 1 || c > r_ || j == 0) throw std::out_of_range("wavelet_sequence::select: bad symbol or ordinal");
    if (r_ == 1) {
        if (j > n_) throw std::out_of_range("wavelet_sequence::select: ordinal beyond occurrences");
        return j;
    }
    std::vector<std::pair<std::int64_t, bool>> path;
    std::size_t count = n_;
    std::int64_t v = 0;
    while (v >= 0) {
        const auto& nd = nodes_[v];
        bool b = c > nd.lo + (nd.hi - nd.lo) / 2;
        path.emplace_back(v, b);
        count = nd.bits.rank(b, count);
        v = b ? nd.right : nd.left;
    }
    if (j > count)
        throw std::out_of_range("wavelet_sequence::select: symbol " + std::to_string(c) + " occurs " +
                                std::to_string(count) + " times");
    for (auto it = path.rbegin(); it != path.rend(); ++it) j = nodes_[it->first].bits.select(it->second, j);
    return j;
}

std::size_t wavelet_sequence::payload_bits() const {
    std::size_t s = 0;
    for (const auto& nd : nodes_) s += nd.bits.payload_bits();
    return s;
}

std::size_t wavelet_sequence::directory_bits() const {
    std::size_t s = 0;
    for (const auto& nd : nodes_) s += nd.bits.directory_bits();
    return s;
}

void wavelet_sequence::serialize(byte_writer& out) const {
    out.put_u8(static_cast<std::uint8_t>(blob_tag::wavelet_sequence));
    out.put_u64(n_);
    out.put_u64(r_);
    out.put_u64(nodes_.size());
    for (const auto& nd : nodes_) nd.bits.serialize(out);
}

wavelet_sequence wavelet_sequence::deserialize(byte_reader& in) {
    if (in.get_u8() != static_cast<std::uint8_t>(blob_tag::wavelet_sequence))
        throw format_error("expected wavelet_sequence tag");
    wavelet_sequence w;
    w.n_ = static_cast<std::size_t>(in.get_u64());
    w.r_ = static_cast<std::size_t>(in.get_u64());
    auto count = in.get_u64();
    if (w.r_ > 1) w.shape(1, w.r_);
    if (count != w.nodes_.size()) throw format_error("wavelet_sequence node count mismatch");
    for (auto& nd : w.nodes_) nd.bits = bitmap::deserialize(in);
    // Each node bitmap must hold exactly the symbols routed to it.
    if (!w.nodes_.empty() && w.nodes_[0].bits.size() != w.n_) throw format_error("wavelet_sequence root length");
    for (const auto& nd : w.nodes_) {
        if (nd.left >= 0 && w.nodes_[nd.left].bits.size() != nd.bits.zeros())
            throw format_error("wavelet_sequence child length");
        if (nd.right >= 0 && w.nodes_[nd.right].bits.size() != nd.bits.ones())
            throw format_error("wavelet_sequence child length");
    }
    return w;
}

} // namespace permc
