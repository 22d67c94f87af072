#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "permc/errors.hpp"
#include "permc/generators.hpp"
#include "permc/runs_codec.hpp"

using namespace permc;
using V = std::vector<std::size_t>;

namespace {

std::string bits_of(const bitmap& b) {
    std::string s;
    for (std::size_t i = 1; i <= b.size(); ++i) s += b.access(i) ? '1' : '0';
    return s;
}

void check_round_trip(const permutation& pi, const runs_codec& c) {
    auto inv = pi.inverse();
    for (std::size_t i = 1; i <= pi.size(); ++i) {
        if (c.apply(i) != pi(i)) FAIL("apply(" << i << ")");
        if (c.inverse(i) != inv(i)) FAIL("inverse(" << i << ")");
    }
}

double bound_after_rebalance(std::size_t n, const V& lengths) {
    double rho = static_cast<double>(lengths.size());
    double extra = rho >= 2 ? 2.0 * static_cast<double>(n) * std::log2(rho) / rho : 0.0;
    return static_cast<double>(n) * (2.0 + entropy(lengths)) + extra;
}

} // namespace

TEST_CASE("encode examples") {
    permutation p(V{1, 3, 5, 7, 9, 2, 4, 6, 8, 10});
    auto c = runs_codec::encode(p);
    CHECK(c.run_count() == 2);
    CHECK(c.run_lengths() == V{5, 5});
    CHECK(bits_of(c.node_bitmap(0)) == "0101010101");
    CHECK(c.apply(3) == 5);
    CHECK(c.inverse(5) == 3);
    CHECK(c.inverse_range(1, 2) == V{1, 6});
    auto hit = c.run_successor(2, 5);
    REQUIRE(hit);
    CHECK(hit->offset == 3);
    CHECK(hit->value == 6);
    CHECK(!c.run_successor(2, 10));
    CHECK(c.run_successor(1, 0)->value == 1);
    CHECK(c.size_in_bits().payload == 10);
    CHECK(c.bitmap_bits() == 10);

    auto id = runs_codec::encode(permutation::identity(12));
    CHECK(id.run_count() == 1);
    CHECK(id.tree().nodes().size() == 1);
    CHECK(id.size_in_bits().payload == 0);
    for (std::size_t i = 1; i <= 12; ++i) {
        CHECK(id.apply(i) == i);
        CHECK(id.inverse(i) == i);
    }

    auto sw = runs_codec::encode(permutation(V{2, 1}));
    CHECK(bits_of(sw.node_bitmap(0)) == "10");
    CHECK(sw.apply(1) == 2);
    CHECK(sw.inverse(1) == 2);
}

TEST_CASE("range and error handling") {
    permutation p(V{1, 3, 5, 7, 9, 2, 4, 6, 8, 10});
    auto c = runs_codec::encode(p);
    CHECK(c.inverse_range(4, 4) == V{c.inverse(4)});
    CHECK(c.inverse_range(1, 10) == V{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(c.apply_range(4, 7) == V{7, 9, 2, 4});
    CHECK_THROWS_AS((void)c.apply(0), std::out_of_range);
    CHECK_THROWS_AS((void)c.apply(11), std::out_of_range);
    CHECK_THROWS_AS((void)c.inverse(11), std::out_of_range);
    CHECK_THROWS_AS((void)c.inverse_range(5, 4), std::out_of_range);
    CHECK_THROWS_AS((void)c.run_successor(3, 1), std::out_of_range);

    auto empty = runs_codec::encode(permutation());
    CHECK(empty.size() == 0);
    CHECK(empty.run_count() == 0);
    CHECK(empty.decode() == permutation());

    CHECK_THROWS_AS(runs_codec::encode_blocks(p, V{5, 4}), validation_error);
    CHECK_THROWS_AS(runs_codec::encode_blocks(p, V{6, 4}), validation_error);
    auto split = runs_codec::encode_blocks(p, V{2, 3, 5});
    CHECK(split.run_count() == 3);
    check_round_trip(p, split);
}

TEST_CASE("round trip, structure and space on generated permutations") {
    gen::rng g(31337);
    std::vector<std::string> kinds{"random", "k-runs", "k-riffle", "strict", "reverse", "identity"};
    for (int rep = 0; rep < 120; ++rep) {
        std::size_t n = rep < 100 ? std::uniform_int_distribution<std::size_t>(1, 600)(g) : std::size_t{1} << 14;
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, 40)(g);
        const auto& kind = kinds[static_cast<std::size_t>(rep) % kinds.size()];
        auto pi = gen::by_name(kind, n, k, g);
        CAPTURE(kind);
        CAPTURE(n);
        for (bool compressed : {false, true}) {
            auto c = runs_codec::encode(pi, compressed);
            check_round_trip(pi, c);
            CHECK(c.decode() == pi);
            auto lengths = c.run_lengths();
            CHECK(lengths == runs(pi).lengths);

            const auto& t = c.tree();
            for (std::size_t v = 0; v < t.nodes().size(); ++v) {
                const auto& nd = t.node(static_cast<std::int64_t>(v));
                if (nd.is_leaf()) continue;
                const auto& b = c.node_bitmap(static_cast<std::int64_t>(v));
                CHECK(b.size() == nd.weight);
                CHECK(b.zeros() == t.node(nd.left).weight);
            }
            CHECK(c.bitmap_bits() == tree_cost(t));
            if (!compressed) CHECK(c.size_in_bits().payload == c.bitmap_bits());

            std::vector<std::uint64_t> w(lengths.begin(), lengths.end());
            auto raw = lengths.empty() ? alphabetic_code_tree() : build_code(w);
            CHECK(static_cast<double>(tree_cost(raw)) <= static_cast<double>(n) * (2.0 + entropy(lengths)));
            CHECK(static_cast<double>(c.bitmap_bits()) <= bound_after_rebalance(n, lengths));
            double rho = static_cast<double>(lengths.size());
            if (lengths.size() >= 2) {
                CHECK(t.max_depth() <= 5 * ceil_log2(lengths.size()));
                double avg = static_cast<double>(c.bitmap_bits()) / static_cast<double>(n);
                CHECK(avg <= 2.0 + entropy(lengths) + 2.0 * std::log2(rho) / rho);
            }
        }
    }
}

TEST_CASE("inverse_range and run_successor against oracles") {
    gen::rng g(8);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 400)(g);
        auto pi = rep % 2 ? gen::uniform(n, g) : gen::k_runs(n, 6, g);
        auto c = runs_codec::encode(pi);
        auto inv = pi.inverse();
        for (int q = 0; q < 40; ++q) {
            std::size_t i = std::uniform_int_distribution<std::size_t>(1, n)(g);
            std::size_t j = std::uniform_int_distribution<std::size_t>(i, n)(g);
            V want;
            for (std::size_t k = i; k <= j; ++k) want.push_back(inv(k));
            std::sort(want.begin(), want.end());
            CHECK(c.inverse_range(i, j) == want);
            V vals;
            for (std::size_t k = i; k <= j; ++k) vals.push_back(pi(k));
            CHECK(c.apply_range(i, j) == vals);
        }
        for (std::size_t t = 1; t <= c.run_count(); ++t) {
            std::size_t start = c.run_start(t), end = c.run_start(t + 1);
            for (std::size_t x = 0; x <= n + 1; x += 1 + n / 37) {
                std::optional<run_hit> want;
                for (std::size_t p = start; p < end; ++p)
                    if (pi(p) > x) {
                        want = run_hit{p - start + 1, pi(p)};
                        break;
                    }
                auto got = c.run_successor(t, x);
                REQUIRE(got.has_value() == want.has_value());
                if (got) {
                    CHECK(got->offset == want->offset);
                    CHECK(got->value == want->value);
                }
            }
        }
    }
}

TEST_CASE("sort_adaptive examples") {
    V a{1, 3, 5, 7, 9, 2, 4, 6, 8, 10};
    auto st = sort_adaptive(std::span<std::size_t>(a));
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(st.comparisons <= 19);

    V sorted(100);
    std::iota(sorted.begin(), sorted.end(), 0);
    CHECK(sort_adaptive(std::span<std::size_t>(sorted)).comparisons == 99);

    for (std::size_t n : {2u, 10u, 1000u}) {
        V rev(n);
        std::iota(rev.rbegin(), rev.rend(), 0);
        auto s = sort_adaptive(std::span<std::size_t>(rev));
        CHECK(std::is_sorted(rev.begin(), rev.end()));
        CHECK(s.comparisons <= n - 1 + n * ceil_log2(n) + 2 * n);
    }

    std::vector<std::string> words{"pear", "apple", "fig", "kiwi", "banana"};
    sort_adaptive(std::span<std::string>(words));
    CHECK(words == std::vector<std::string>{"apple", "banana", "fig", "kiwi", "pear"});
}

TEST_CASE("sort_adaptive matches std::sort within n(3 + H(Runs))") {
    gen::rng g(4);
    for (int rep = 0; rep < 300; ++rep) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3000)(g);
        std::size_t s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
        std::size_t ks[] = {1, 2, s, n / 2, n};
        auto pi = gen::k_runs(n, ks[rep % 5], g);
        V a(pi.values().begin(), pi.values().end());
        double h = entropy(runs(pi).lengths);
        auto st = sort_adaptive(std::span<std::size_t>(a));
        V want(n);
        std::iota(want.begin(), want.end(), std::size_t{1});
        CHECK(a == want);
        CHECK(static_cast<double>(st.comparisons) <= static_cast<double>(n) * (3.0 + h));
    }
}

TEST_CASE("container round trip and corruption") {
    gen::rng g(77);
    for (bool compressed : {false, true}) {
        for (std::size_t n : {0u, 1u, 2u, 500u}) {
            auto pi = gen::k_runs(n, 9, g);
            auto c = runs_codec::encode(pi, compressed);
            auto bytes = c.to_container().to_bytes();
            auto back = runs_codec::from_container(container::from_bytes(bytes));
            CHECK(back.decode() == pi);
            CHECK(back.compressed() == compressed);
            CHECK(back.to_container().to_bytes() == bytes);
        }
    }
    auto c = runs_codec::encode(gen::uniform(300, g));
    auto bytes = c.to_container().to_bytes();
    auto bad = bytes;
    bad[0] = 'X';
    CHECK_THROWS_AS(container::from_bytes(bad), format_error);
    bad = bytes;
    bad[6] = 9;  // structure tag
    CHECK_THROWS_AS(container::from_bytes(bad), format_error);
    bad = bytes;
    bad[6] = 2;  // valid tag, wrong structure
    CHECK_THROWS_AS(runs_codec::from_container(container::from_bytes(bad)), format_error);
    bad = bytes;
    bad.pop_back();
    CHECK_THROWS_AS(runs_codec::from_container(container::from_bytes(bad)), format_error);
    bad = bytes;
    bad[bad.size() - 40] ^= 0xff;
    CHECK_THROWS_AS(runs_codec::from_container(container::from_bytes(bad)), format_error);
}
