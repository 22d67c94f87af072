#pragma once

// Powers of permutations and of arbitrary functions on [n].
//
// cycle_codec writes every cycle starting at its smallest value, cycles in
// increasing order of that value, and stores the concatenation pi_c in an
// inner codec with a bitvector marking where each cycle starts. pi^k(i)
// finds i in pi_c, steps k mod (cycle length) inside its cycle, and reads
// the value back.
//
// int_function splits f : [n] -> [n] into the permutation on its cyclic
// elements and a forest of the remaining elements hanging off them, with
// parent(x) = f(x).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permc/any_codec.hpp"
#include "permc/bit_vector.hpp"
#include "permc/container.hpp"
#include "permc/permutation.hpp"

namespace permc {

class cycle_codec {
public:
    cycle_codec() = default;

    static cycle_codec encode(const permutation& pi, codec_kind inner = codec_kind::runs, bool compressed = false);

    [[nodiscard]] std::size_t size() const { return starts_.size(); }
    [[nodiscard]] std::size_t cycle_count() const { return starts_.ones(); }
    [[nodiscard]] const any_codec& inner() const { return inner_; }
    [[nodiscard]] const bit_vector& starts() const { return starts_; }

    // pi^k(i) for any integer k.
    [[nodiscard]] std::size_t power(std::size_t i, std::int64_t k) const;
    [[nodiscard]] std::size_t apply(std::size_t i) const { return power(i, 1); }
    [[nodiscard]] std::size_t inverse(std::size_t i) const { return power(i, -1); }
    [[nodiscard]] std::size_t cycle_length_of(std::size_t i) const;
    [[nodiscard]] permutation decode() const;
    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    static cycle_codec from_container(const container& c);

private:
    any_codec inner_;   // pi_c
    bit_vector starts_;
};

class int_function {
public:
    int_function() = default;

    // Throws validation_error unless every f[i] lies in [1, n].
    static int_function decompose(const std::vector<std::size_t>& f, codec_kind inner = codec_kind::runs);

    [[nodiscard]] std::size_t size() const { return parent_.size(); }
    [[nodiscard]] bool is_cyclic(std::size_t i) const { return cyclic_.access(i); }
    [[nodiscard]] std::size_t cyclic_count() const { return cyclic_.ones(); }
    // Steps from i to the first cyclic element (0 for cyclic elements).
    [[nodiscard]] std::size_t depth(std::size_t i) const;
    [[nodiscard]] std::size_t apply(std::size_t i) const { return power(i, 1).front(); }
    [[nodiscard]] const cycle_codec& cycles() const { return cycles_; }

    // f^k(i): a single value for k >= 0; for k < 0 every x with
    // f^{-k}(x) = i, in increasing order.
    [[nodiscard]] std::vector<std::size_t> power(std::size_t i, std::int64_t k) const;
    [[nodiscard]] std::vector<std::size_t> values() const;
    [[nodiscard]] space_breakdown size_in_bits() const;

    [[nodiscard]] container to_container() const;
    static int_function from_container(const container& c);

private:
    void check_position(std::size_t i, const char* op) const;
    void build_forest();
    [[nodiscard]] std::size_t level_ancestor(std::size_t x, std::size_t k) const;
    [[nodiscard]] std::size_t cyclic_power(std::size_t x, std::int64_t k) const;
    void descendants_at(std::size_t x, std::size_t level, std::vector<std::size_t>& out) const;

    bit_vector cyclic_;
    cycle_codec cycles_;                // over cyclic elements renumbered by rank in cyclic_
    std::vector<std::size_t> parent_;   // f(x) for tree nodes, 0 for cyclic ones (index x - 1)
    // Derived on build and load.
    std::vector<std::uint32_t> depth_;
    std::vector<std::vector<std::uint32_t>> jump_;  // jump_[j][x - 1]: 2^j-th ancestor, capped at the cyclic root
    std::vector<std::uint32_t> enter_, leave_;       // preorder interval of each subtree
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> levels_;  // (enter, node) by depth
};

} // namespace permc
