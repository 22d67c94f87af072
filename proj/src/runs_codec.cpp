#include "permc/runs_codec.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "permc/errors.hpp"

namespace permc {

namespace {

struct bitmap_trace {
    std::vector<bit_builder>& builders;
    bit_builder* current = nullptr;
    void begin(std::int64_t node, std::size_t size) {
        current = &builders[static_cast<std::size_t>(node)];
        *current = bit_builder(size);
    }
    void bit(bool b) { current->push_back(b); }
    void end() {}
};

enum section_tag : std::uint8_t { header = 1, lengths = 2, shape = 3, node_bitmaps = 4 };

// Elias gamma, LSB-first: (len - 1) zeros, a one, then the low len - 1 bits.
void put_gamma(bit_builder& b, std::uint64_t v) {
    auto len = static_cast<unsigned>(std::bit_width(v));
    for (unsigned k = 1; k < len; ++k) b.push_back(false);
    b.push_back(true);
    b.append_bits(v, len - 1);
}

std::uint64_t get_gamma(std::span<const std::uint64_t> words, std::size_t nbits, std::size_t& pos) {
    unsigned zeros = 0;
    for (;;) {
        if (pos >= nbits) throw format_error("truncated gamma code");
        bool bit = (words[pos / 64] >> (pos % 64)) & 1u;
        ++pos;
        if (bit) break;
        if (++zeros > 63) throw format_error("gamma code too long");
    }
    if (pos + zeros > nbits) throw format_error("truncated gamma code");
    std::uint64_t low = read_bits(words, pos, zeros);
    pos += zeros;
    return (std::uint64_t{1} << zeros) | low;
}

} // namespace

runs_codec runs_codec::encode(const permutation& pi, bool compressed) {
    return build(pi, runs(pi).lengths, compressed);
}

runs_codec runs_codec::encode_blocks(const permutation& pi, std::span<const std::size_t> lengths, bool compressed) {
    auto v = pi.values();
    std::size_t pos = 0;
    for (auto len : lengths) {
        if (len == 0) throw validation_error("encode_blocks: empty block");
        if (pos + len > v.size()) throw validation_error("encode_blocks: block lengths exceed n");
        for (std::size_t k = pos + 1; k < pos + len; ++k)
            if (v[k] < v[k - 1])
                throw validation_error("encode_blocks: block descends at position " + std::to_string(k + 1));
        pos += len;
    }
    if (pos != v.size()) throw validation_error("encode_blocks: block lengths do not cover n");
    return build(pi, std::vector<std::size_t>(lengths.begin(), lengths.end()), compressed);
}

runs_codec runs_codec::build(const permutation& pi, std::vector<std::size_t> lengths, bool compressed) {
    runs_codec c;
    c.n_ = pi.size();
    c.compressed_ = compressed;
    c.run_starts_.assign(lengths.size() + 1, 1);
    for (std::size_t k = 0; k < lengths.size(); ++k) c.run_starts_[k + 1] = c.run_starts_[k] + lengths[k];
    if (lengths.empty()) return c;

    const std::size_t rho = lengths.size();
    c.tree_ = rebalance(build_code(std::span<const std::size_t>(lengths)), rho);
    c.bitmaps_.resize(c.tree_.nodes().size());
    if (rho == 1) return c;

    std::vector<std::size_t> data(pi.values().begin(), pi.values().end());
    std::vector<std::size_t> starts(rho + 1);
    for (std::size_t k = 0; k <= rho; ++k) starts[k] = c.run_starts_[k] - 1;
    std::vector<bit_builder> builders(c.tree_.nodes().size());
    std::uint64_t comparisons = 0;
    detail::merge_along_tree(c.tree_, std::span<const std::size_t>(starts), std::span<std::size_t>(data),
                             std::less<>{}, comparisons, bitmap_trace{builders});
    for (std::size_t v = 0; v < builders.size(); ++v)
        if (!c.tree_.node(static_cast<std::int64_t>(v)).is_leaf())
            c.bitmaps_[v] = bitmap(std::move(builders[v]), compressed);
    return c;
}

std::vector<std::size_t> runs_codec::run_lengths() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < run_starts_.size(); ++k) out.push_back(run_starts_[k + 1] - run_starts_[k]);
    return out;
}

void runs_codec::check_position(std::size_t i, const char* op) const {
    if (i == 0 || i > n_)
        throw std::out_of_range(std::string("runs_codec::") + op + ": index " + std::to_string(i) + " outside [1," +
                                std::to_string(n_) + "]");
}

std::size_t runs_codec::apply(std::size_t i) const {
    check_position(i, "apply");
    if (run_count() <= 1) return i;
    // Down: find the leaf holding position i; remember the turns.
    std::int64_t path[128];
    bool turn[128];
    std::size_t depth = 0;
    std::int64_t v = 0;
    std::size_t j = i;
    while (!tree_.node(v).is_leaf()) {
        const auto& b = bitmaps_[static_cast<std::size_t>(v)];
        std::size_t z = b.zeros();
        path[depth] = v;
        if (j <= z) {
            turn[depth++] = false;
            v = tree_.node(v).left;
        } else {
            j -= z;
            turn[depth++] = true;
            v = tree_.node(v).right;
        }
    }
    // Up: the j-th element of the child's merged area sits at select in the parent.
    while (depth-- > 0) j = bitmaps_[static_cast<std::size_t>(path[depth])].select(turn[depth], j);
    return j;
}

std::size_t runs_codec::inverse(std::size_t i) const {
    check_position(i, "inverse");
    if (run_count() <= 1) return i;
    std::size_t p = 0;
    std::int64_t v = 0;
    while (!tree_.node(v).is_leaf()) {
        const auto& b = bitmaps_[static_cast<std::size_t>(v)];
        if (b.access(i)) {
            p += b.zeros();
            i = b.rank1(i);
            v = tree_.node(v).right;
        } else {
            i = b.rank0(i);
            v = tree_.node(v).left;
        }
    }
    return p + i;
}

std::vector<std::size_t> runs_codec::inverse_range(std::size_t i, std::size_t j) const {
    check_position(i, "inverse_range");
    check_position(j, "inverse_range");
    if (i > j) throw std::out_of_range("runs_codec::inverse_range: empty range");
    std::vector<std::size_t> out;
    out.reserve(j - i + 1);
    if (run_count() <= 1) {
        for (std::size_t k = i; k <= j; ++k) out.push_back(k);
        return out;
    }
    // Simultaneous descent; children are visited left to right so leaves
    // report in position order.
    struct frame {
        std::int64_t v;
        std::size_t lo, hi, p;
    };
    std::vector<frame> stack{{0, i, j, 0}};
    while (!stack.empty()) {
        auto [v, lo, hi, p] = stack.back();
        stack.pop_back();
        if (lo > hi) continue;
        const auto& nd = tree_.node(v);
        if (nd.is_leaf()) {
            for (std::size_t k = lo; k <= hi; ++k) out.push_back(p + k);
            continue;
        }
        const auto& b = bitmaps_[static_cast<std::size_t>(v)];
        std::size_t r1_lo = b.rank1(lo - 1), r1_hi = b.rank1(hi);
        std::size_t r0_lo = (lo - 1) - r1_lo, r0_hi = hi - r1_hi;
        if (r1_hi > r1_lo) stack.push_back({nd.right, r1_lo + 1, r1_hi, p + b.zeros()});
        if (r0_hi > r0_lo) stack.push_back({nd.left, r0_lo + 1, r0_hi, p});
    }
    return out;
}

std::vector<std::size_t> runs_codec::apply_range(std::size_t i, std::size_t j) const {
    check_position(i, "apply_range");
    check_position(j, "apply_range");
    if (i > j) throw std::out_of_range("runs_codec::apply_range: empty range");
    std::vector<std::size_t> out;
    out.reserve(j - i + 1);
    if (run_count() <= 1) {
        for (std::size_t k = i; k <= j; ++k) out.push_back(k);
        return out;
    }
    // Walk the leaves overlapping [i, j]; share each leaf's descent.
    std::size_t pos = i;
    while (pos <= j) {
        std::int64_t path[128];
        bool turn[128];
        std::size_t depth = 0;
        std::int64_t v = 0;
        std::size_t off = pos;
        while (!tree_.node(v).is_leaf()) {
            std::size_t z = bitmaps_[static_cast<std::size_t>(v)].zeros();
            path[depth] = v;
            if (off <= z) {
                turn[depth++] = false;
                v = tree_.node(v).left;
            } else {
                off -= z;
                turn[depth++] = true;
                v = tree_.node(v).right;
            }
        }
        std::size_t leaf = tree_.node(v).first_leaf;
        std::size_t leaf_end = run_starts_[leaf + 1] - 1;
        std::size_t last = std::min(j, leaf_end);
        for (std::size_t q = pos; q <= last; ++q, ++off) {
            std::size_t x = off;
            for (std::size_t d = depth; d-- > 0;) x = bitmaps_[static_cast<std::size_t>(path[d])].select(turn[d], x);
            out.push_back(x);
        }
        pos = last + 1;
    }
    return out;
}

std::optional<run_hit> runs_codec::run_successor(std::size_t t, std::size_t x) const {
    if (t == 0 || t > run_count()) throw std::out_of_range("runs_codec::run_successor: run " + std::to_string(t));
    // c = number of elements of the current node's area with value <= x.
    std::size_t c = std::min(x, n_);
    if (run_count() > 1) {
        const std::size_t leaf = t - 1;
        std::int64_t v = 0;
        while (!tree_.node(v).is_leaf()) {
            const auto& nd = tree_.node(v);
            const auto& b = bitmaps_[static_cast<std::size_t>(v)];
            bool right = leaf > tree_.node(nd.left).last_leaf;
            c = b.rank(right, c);
            v = right ? nd.right : nd.left;
        }
    }
    std::size_t len = run_starts_[t] - run_starts_[t - 1];
    if (c >= len) return std::nullopt;
    return run_hit{c + 1, apply(run_starts_[t - 1] + c)};
}

permutation runs_codec::decode() const {
    std::vector<std::size_t> v(n_);
    for (std::size_t value = 1; value <= n_; ++value) v[inverse(value) - 1] = value;
    return permutation(std::move(v));
}

std::size_t runs_codec::bitmap_bits() const {
    std::size_t s = 0;
    for (const auto& b : bitmaps_) s += b.size();
    return s;
}

space_breakdown runs_codec::size_in_bits() const {
    space_breakdown s;
    for (std::size_t v = 0; v < bitmaps_.size(); ++v) {
        if (tree_.node(static_cast<std::int64_t>(v)).is_leaf()) continue;
        s.payload += bitmaps_[v].payload_bits();
        s.directories += bitmaps_[v].directory_bits();
    }
    // n, plus two absolute endpoints per leaf and the tree shape.
    s.pointers = 64 + 2 * 64 * run_count() + tree_.nodes().size();
    return s;
}

container runs_codec::to_container() const {
    container c(structure_tag::runs_codec);
    {
        byte_writer w;
        w.put_u64(n_);
        w.put_u64(run_count());
        w.put_u8(compressed_ ? 1 : 0);
        c.add(header, std::move(w).bytes());
    }
    {
        bit_builder g;
        for (auto len : run_lengths()) put_gamma(g, len);
        byte_writer w;
        w.put_u64(g.size());
        w.put_words(g.words());
        c.add(lengths, std::move(w).bytes());
    }
    {
        bit_builder s;
        for (bool b : tree_.preorder_shape()) s.push_back(b);
        byte_writer w;
        w.put_u64(s.size());
        w.put_words(s.words());
        c.add(shape, std::move(w).bytes());
    }
    {
        // Internal nodes in preorder: a table of byte offsets, then the blobs.
        std::vector<std::vector<std::uint8_t>> blobs;
        for (std::size_t v = 0; v < bitmaps_.size(); ++v) {
            if (tree_.node(static_cast<std::int64_t>(v)).is_leaf()) continue;
            byte_writer b;
            bitmaps_[v].serialize(b);
            blobs.push_back(std::move(b).bytes());
        }
        byte_writer w;
        w.put_u64(blobs.size());
        std::uint64_t off = 0;
        for (const auto& b : blobs) {
            w.put_u64(off);
            off += b.size();
        }
        for (const auto& b : blobs) w.put_bytes(b);
        c.add(node_bitmaps, std::move(w).bytes());
    }
    return c;
}

runs_codec runs_codec::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {header, lengths, shape, node_bitmaps};
    c.expect(structure_tag::runs_codec, allowed);
    runs_codec out;

    byte_reader h(c.get(header));
    out.n_ = static_cast<std::size_t>(h.get_u64());
    auto rho = h.get_u64();
    auto flag = h.get_u8();
    if (flag > 1) throw format_error("runs_codec: bad compression flag");
    out.compressed_ = flag == 1;
    h.expect_end();
    if (rho > out.n_) throw format_error("runs_codec: more runs than elements");

    byte_reader lr(c.get(lengths));
    auto nbits = lr.get_u64();
    auto words = lr.get_words();
    lr.expect_end();
    if (words.size() != (nbits + 63) / 64) throw format_error("runs_codec: length stream size");
    std::vector<std::uint64_t> lens;
    std::size_t pos = 0, total = 0;
    for (std::uint64_t k = 0; k < rho; ++k) {
        auto len = get_gamma(words, static_cast<std::size_t>(nbits), pos);
        lens.push_back(len);
        total += static_cast<std::size_t>(len);
    }
    if (pos != nbits || total != out.n_) throw format_error("runs_codec: run lengths do not match n");
    out.run_starts_.assign(rho + 1, 1);
    for (std::size_t k = 0; k < rho; ++k) out.run_starts_[k + 1] = out.run_starts_[k] + lens[k];
    if (rho == 0) out.run_starts_.clear();

    byte_reader sr(c.get(shape));
    auto sbits = sr.get_u64();
    auto swords = sr.get_words();
    sr.expect_end();
    if (swords.size() != (sbits + 63) / 64) throw format_error("runs_codec: shape stream size");
    std::vector<bool> shape_bits(static_cast<std::size_t>(sbits));
    for (std::size_t k = 0; k < shape_bits.size(); ++k) shape_bits[k] = (swords[k / 64] >> (k % 64)) & 1u;
    out.tree_ = alphabetic_code_tree::from_preorder(shape_bits, lens);

    byte_reader br(c.get(node_bitmaps));
    auto count = br.get_u64();
    std::size_t internal = rho == 0 ? 0 : rho - 1;
    if (count != internal) throw format_error("runs_codec: node bitmap count");
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(count));
    for (auto& o : offsets) o = br.get_u64();
    out.bitmaps_.resize(out.tree_.nodes().size());
    std::size_t base = 0, k = 0;
    for (std::size_t v = 0; v < out.bitmaps_.size(); ++v) {
        const auto& nd = out.tree_.node(static_cast<std::int64_t>(v));
        if (nd.is_leaf()) continue;
        if (offsets[k++] != base) throw format_error("runs_codec: node bitmap offset");
        std::size_t before = br.remaining();
        out.bitmaps_[v] = bitmap::deserialize(br);
        base += before - br.remaining();
        const auto& b = out.bitmaps_[v];
        if (b.size() != nd.weight || b.zeros() != out.tree_.node(nd.left).weight)
            throw format_error("runs_codec: node bitmap does not match tree weights");
        if (b.compressed() != out.compressed_) throw format_error("runs_codec: bitmap kind mismatch");
    }
    br.expect_end();
    return out;
}

} // namespace permc
