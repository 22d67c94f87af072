#include "permc/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permc/errors.hpp"

namespace permc {

namespace {

enum cycle_section : std::uint8_t { cycle_header = 1, cycle_starts = 2, cycle_inner = 3 };
enum function_section : std::uint8_t { fn_header = 1, fn_cyclic = 2, fn_parents = 3, fn_cycles = 4 };

std::size_t floor_mod(std::int64_t k, std::size_t len) {
    auto m = static_cast<std::int64_t>(len);
    auto r = k % m;
    return static_cast<std::size_t>(r < 0 ? r + m : r);
}

} // namespace

cycle_codec cycle_codec::encode(const permutation& pi, codec_kind inner, bool compressed) {
    const std::size_t n = pi.size();
    std::vector<std::size_t> seq;
    seq.reserve(n);
    std::vector<bool> seen(n + 1, false), marks(n, false);
    for (std::size_t v = 1; v <= n; ++v) {
        if (seen[v]) continue;
        marks[seq.size()] = true;
        for (std::size_t x = v; !seen[x]; x = pi(x)) {
            seen[x] = true;
            seq.push_back(x);
        }
    }
    cycle_codec c;
    c.starts_ = bit_vector(marks);
    c.inner_ = any_codec::encode(permutation(std::move(seq)), inner, compressed);
    return c;
}

std::size_t cycle_codec::power(std::size_t i, std::int64_t k) const {
    if (i == 0 || i > size())
        throw std::out_of_range("cycle_codec::power: index " + std::to_string(i) + " outside [1," +
                                std::to_string(size()) + "]");
    std::size_t p = inner_.inverse(i);
    std::size_t c = starts_.rank1(p);
    std::size_t s = starts_.select1(c);
    std::size_t e = c < cycle_count() ? starts_.select1(c + 1) : size() + 1;
    std::size_t len = e - s;
    std::size_t step = floor_mod(k, len);
    if (step == 0) return i;
    return inner_.apply(s + (p - s + step) % len);
}

std::size_t cycle_codec::cycle_length_of(std::size_t i) const {
    std::size_t p = inner_.inverse(i);
    std::size_t c = starts_.rank1(p);
    std::size_t e = c < cycle_count() ? starts_.select1(c + 1) : size() + 1;
    return e - starts_.select1(c);
}

permutation cycle_codec::decode() const {
    std::vector<std::size_t> v(size());
    auto seq = inner_.decode();
    for (std::size_t c = 1; c <= cycle_count(); ++c) {
        std::size_t s = starts_.select1(c);
        std::size_t e = c < cycle_count() ? starts_.select1(c + 1) : size() + 1;
        for (std::size_t p = s; p < e; ++p) v[seq(p) - 1] = seq(p + 1 < e ? p + 1 : s);
    }
    return permutation(std::move(v));
}

space_breakdown cycle_codec::size_in_bits() const {
    space_breakdown s = inner_.size_in_bits();
    s.payload += starts_.payload_bits();
    s.directories += starts_.directory_bits();
    return s;
}

container cycle_codec::to_container() const {
    container c(structure_tag::cycle_codec);
    byte_writer h;
    h.put_u64(size());
    h.put_u64(cycle_count());
    c.add(cycle_header, std::move(h).bytes());
    byte_writer s;
    starts_.serialize(s);
    c.add(cycle_starts, std::move(s).bytes());
    c.add(cycle_inner, inner_.to_container().to_bytes());
    return c;
}

cycle_codec cycle_codec::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {cycle_header, cycle_starts, cycle_inner};
    c.expect(structure_tag::cycle_codec, allowed);
    cycle_codec out;
    byte_reader h(c.get(cycle_header));
    auto n = h.get_u64();
    auto cycles = h.get_u64();
    h.expect_end();
    byte_reader s(c.get(cycle_starts));
    out.starts_ = bit_vector::deserialize(s);
    s.expect_end();
    out.inner_ = any_codec::from_container(container::from_bytes(c.get(cycle_inner)));
    if (out.starts_.size() != n || out.inner_.size() != n || out.starts_.ones() != cycles)
        throw format_error("cycle_codec: component sizes do not match");
    if (n > 0 && !out.starts_.access(1)) throw format_error("cycle_codec: first position does not start a cycle");
    // Canonical form: cycle heads increase and each head is its cycle's minimum.
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= cycles; ++k) {
        std::size_t s0 = out.starts_.select1(k);
        std::size_t e = k < cycles ? out.starts_.select1(k + 1) : n + 1;
        std::size_t head = out.inner_.apply(s0);
        if (head <= prev) throw format_error("cycle_codec: cycles are not in canonical order");
        for (std::size_t p = s0 + 1; p < e; ++p)
            if (out.inner_.apply(p) < head) throw format_error("cycle_codec: cycle does not start at its minimum");
        prev = head;
    }
    return out;
}

int_function int_function::decompose(const std::vector<std::size_t>& f, codec_kind inner) {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        if (f[i] < 1 || f[i] > n)
            throw validation_error("function value " + std::to_string(f[i]) + " at position " + std::to_string(i + 1) +
                                   " outside [1," + std::to_string(n) + "]");

    // 0 = unvisited, 1 = on the current path, 2 = done.
    std::vector<std::uint8_t> state(n + 1, 0);
    std::vector<bool> cyclic(n, false);
    std::vector<std::size_t> path;
    for (std::size_t s = 1; s <= n; ++s) {
        if (state[s]) continue;
        std::size_t x = s;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = f[x - 1];
        }
        if (state[x] == 1)
            for (std::size_t y = x;;) {
                cyclic[y - 1] = true;
                y = f[y - 1];
                if (y == x) break;
            }
        for (auto y : path) state[y] = 2;
        path.clear();
    }

    int_function out;
    out.cyclic_ = bit_vector(cyclic);
    std::vector<std::size_t> g;
    out.parent_.assign(n, 0);
    for (std::size_t x = 1; x <= n; ++x) {
        if (cyclic[x - 1]) g.push_back(out.cyclic_.rank1(f[x - 1]));
        else out.parent_[x - 1] = f[x - 1];
    }
    out.cycles_ = cycle_codec::encode(permutation(std::move(g)), inner);
    out.build_forest();
    return out;
}

void int_function::build_forest() {
    const std::size_t n = parent_.size();
    std::vector<std::vector<std::uint32_t>> children(n + 1);
    for (std::size_t x = 1; x <= n; ++x)
        if (!cyclic_.access(x)) children[parent_[x - 1]].push_back(static_cast<std::uint32_t>(x));

    depth_.assign(n, 0);
    enter_.assign(n, 0);
    leave_.assign(n, 0);
    levels_.clear();
    std::size_t levels_needed = 1;
    std::uint32_t clock = 0;
    std::size_t reached = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;  // (node, next child index)
    for (std::size_t r = 1; r <= n; ++r) {
        if (!cyclic_.access(r)) continue;
        stack.push_back({static_cast<std::uint32_t>(r), 0});
        enter_[r - 1] = clock++;
        ++reached;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            if (next < children[x].size()) {
                std::uint32_t y = children[x][next++];
                depth_[y - 1] = depth_[x - 1] + 1;
                levels_needed = std::max<std::size_t>(levels_needed, depth_[y - 1] + 1);
                enter_[y - 1] = clock++;
                ++reached;
                stack.push_back({y, 0});
            } else {
                leave_[x - 1] = clock - 1;
                stack.pop_back();
            }
        }
    }
    if (reached != n) throw format_error("int_function: parent links do not form a forest over the cyclic elements");

    levels_.resize(levels_needed);
    for (std::size_t x = 1; x <= n; ++x) levels_[depth_[x - 1]].push_back({enter_[x - 1], static_cast<std::uint32_t>(x)});
    for (auto& l : levels_) std::sort(l.begin(), l.end());

    // Cyclic elements point to themselves so jumps saturate at the root.
    jump_.assign(1, std::vector<std::uint32_t>(n));
    for (std::size_t x = 1; x <= n; ++x)
        jump_[0][x - 1] = static_cast<std::uint32_t>(cyclic_.access(x) ? x : parent_[x - 1]);
    for (std::size_t j = 1; (std::size_t{1} << j) < levels_needed; ++j) {
        const auto& prev = jump_[j - 1];
        std::vector<std::uint32_t> next(n);
        for (std::size_t x = 0; x < n; ++x) next[x] = prev[prev[x] - 1];
        jump_.push_back(std::move(next));
    }
}

void int_function::check_position(std::size_t i, const char* op) const {
    if (i == 0 || i > size())
        throw std::out_of_range(std::string("int_function::") + op + ": index " + std::to_string(i) + " outside [1," +
                                std::to_string(size()) + "]");
}

std::size_t int_function::depth(std::size_t i) const {
    check_position(i, "depth");
    return depth_[i - 1];
}

std::size_t int_function::level_ancestor(std::size_t x, std::size_t k) const {
    for (std::size_t j = 0; k > 0; ++j, k >>= 1)
        if (k & 1) x = jump_[j][x - 1];
    return x;
}

std::size_t int_function::cyclic_power(std::size_t x, std::int64_t k) const {
    std::size_t r = cycles_.power(cyclic_.rank1(x), k);
    return cyclic_.select1(r);
}

void int_function::descendants_at(std::size_t x, std::size_t level, std::vector<std::size_t>& out) const {
    if (level >= levels_.size()) return;
    const auto& l = levels_[level];
    auto lo = std::lower_bound(l.begin(), l.end(), std::pair<std::uint32_t, std::uint32_t>{enter_[x - 1], 0});
    for (auto it = lo; it != l.end() && it->first <= leave_[x - 1]; ++it) out.push_back(it->second);
}

std::vector<std::size_t> int_function::power(std::size_t i, std::int64_t k) const {
    check_position(i, "power");
    if (k >= 0) {
        auto steps = static_cast<std::uint64_t>(k);
        std::size_t d = depth_[i - 1];
        if (steps <= d) return {level_ancestor(i, static_cast<std::size_t>(steps))};
        std::size_t root = level_ancestor(i, d);
        // Reduce before the signed conversion; the cycle length divides out.
        std::size_t len = cycles_.cycle_length_of(cyclic_.rank1(root));
        return {cyclic_power(root, static_cast<std::int64_t>((steps - d) % len))};
    }

    const std::uint64_t m = static_cast<std::uint64_t>(-(k + 1)) + 1;
    std::vector<std::size_t> out;
    if (!cyclic_.access(i)) {
        if (m < levels_.size()) descendants_at(i, depth_[i - 1] + static_cast<std::size_t>(m), out);
    } else {
        // x at depth t reaches its root after t steps, then needs m - t more.
        std::size_t len = cycles_.cycle_length_of(cyclic_.rank1(i));
        std::size_t top = static_cast<std::size_t>(std::min<std::uint64_t>(m, levels_.size() - 1));
        for (std::size_t t = 0; t <= top; ++t) {
            auto back = static_cast<std::int64_t>((m - t) % len);
            descendants_at(cyclic_power(i, -back), t, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> int_function::values() const {
    std::vector<std::size_t> f(size());
    for (std::size_t x = 1; x <= size(); ++x) f[x - 1] = cyclic_.access(x) ? cyclic_power(x, 1) : parent_[x - 1];
    return f;
}

space_breakdown int_function::size_in_bits() const {
    space_breakdown s = cycles_.size_in_bits();
    s.payload += cyclic_.payload_bits();
    s.directories += cyclic_.directory_bits();
    // Plain forest: parent, depth, preorder interval and level entry per
    // node, plus the jump table.
    const std::size_t n = size();
    s.pointers += 64 * (n - cyclic_count()) + 32 * 5 * n + 32 * n * jump_.size();
    return s;
}

container int_function::to_container() const {
    container c(structure_tag::int_function);
    byte_writer h;
    h.put_u64(size());
    h.put_u64(cyclic_count());
    c.add(fn_header, std::move(h).bytes());
    byte_writer b;
    cyclic_.serialize(b);
    c.add(fn_cyclic, std::move(b).bytes());
    byte_writer p;
    std::vector<std::uint64_t> parents;
    for (std::size_t x = 1; x <= size(); ++x)
        if (!cyclic_.access(x)) parents.push_back(parent_[x - 1]);
    p.put_words(parents);
    c.add(fn_parents, std::move(p).bytes());
    c.add(fn_cycles, cycles_.to_container().to_bytes());
    return c;
}

int_function int_function::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {fn_header, fn_cyclic, fn_parents, fn_cycles};
    c.expect(structure_tag::int_function, allowed);
    int_function out;
    byte_reader h(c.get(fn_header));
    auto n = static_cast<std::size_t>(h.get_u64());
    auto m = h.get_u64();
    h.expect_end();
    byte_reader b(c.get(fn_cyclic));
    out.cyclic_ = bit_vector::deserialize(b);
    b.expect_end();
    byte_reader p(c.get(fn_parents));
    auto parents = p.get_words();
    p.expect_end();
    out.cycles_ = cycle_codec::from_container(container::from_bytes(c.get(fn_cycles)));
    if (out.cyclic_.size() != n || out.cyclic_.ones() != m || out.cycles_.size() != m || parents.size() != n - m)
        throw format_error("int_function: component sizes do not match");
    out.parent_.assign(n, 0);
    std::size_t k = 0;
    for (std::size_t x = 1; x <= n; ++x) {
        if (out.cyclic_.access(x)) continue;
        auto v = parents[k++];
        if (v < 1 || v > n || v == x) throw format_error("int_function: parent out of range");
        out.parent_[x - 1] = static_cast<std::size_t>(v);
    }
    out.build_forest();
    return out;
}

} // namespace permc
