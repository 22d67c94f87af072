#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "permc/errors.hpp"
#include "permc/generators.hpp"
#include "permc/strict_codec.hpp"

using namespace permc;
using V = std::vector<std::size_t>;

namespace {

std::string bits_of(const bitmap& b) {
    std::string s;
    for (std::size_t i = 1; i <= b.size(); ++i) s += b.access(i) ? '1' : '0';
    return s;
}

} // namespace

TEST_CASE("encode_strict examples") {
    permutation p(V{6, 7, 8, 9, 10, 1, 2, 3, 4, 5});
    auto c = strict_codec::encode(p);
    CHECK(c.strict_run_count() == 2);
    CHECK(bits_of(c.heads()) == "1000010000");
    CHECK(bits_of(c.head_values()) == "1000010000");
    CHECK(c.inner().decode() == permutation(V{2, 1}));
    CHECK(c.apply(3) == 8);
    CHECK(c.apply(6) == 1);
    CHECK(c.inverse(8) == 3);

    auto id = strict_codec::encode(permutation::identity(20));
    CHECK(id.strict_run_count() == 1);
    CHECK(id.inner().decode() == permutation(V{1}));
    CHECK(id.heads().ones() == 1);
    CHECK(id.head_values().ones() == 1);
    for (std::size_t i = 1; i <= 20; ++i) {
        CHECK(id.apply(i) == i);
        CHECK(id.inverse(i) == i);
    }

    permutation q(V{1, 3, 5, 7, 9, 2, 4, 6, 8, 10});
    auto d = strict_codec::encode(q);
    CHECK(d.strict_run_count() == 10);
    CHECK(d.inner().decode() == q);

    CHECK_THROWS_AS((void)c.apply(0), std::out_of_range);
    CHECK_THROWS_AS((void)c.inverse(11), std::out_of_range);
    auto e = strict_codec::encode(permutation());
    CHECK(e.size() == 0);
    CHECK(e.decode() == permutation());
}

TEST_CASE("identity marks stay tiny") {
    for (std::size_t n : {1u, 1000u, 1u << 16}) {
        auto c = strict_codec::encode(permutation::identity(n));
        CHECK(c.inner().size() == 1);
        auto s = c.size_in_bits();
        // Two compressed marks over n bits with a single one each: the offset
        // payload is at most one word per mark; class bits grow as 4n/15.
        auto blocks = (n + 14) / 15;
        CHECK(s.payload <= 2 * (4 * blocks + 64));
    }
}

TEST_CASE("strict codec round trip and structure") {
    gen::rng g(12);
    std::vector<std::string> kinds{"strict", "random", "k-runs", "identity", "reverse"};
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t n = rep < 90 ? std::uniform_int_distribution<std::size_t>(1, 800)(g) : std::size_t{1} << 14;
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, 50)(g);
        const auto& kind = kinds[static_cast<std::size_t>(rep) % kinds.size()];
        auto pi = gen::by_name(kind, n, k, g);
        CAPTURE(kind);
        CAPTURE(n);
        auto c = strict_codec::encode(pi, rep % 2 == 0, rep % 3 == 0);
        auto plain = runs_codec::encode(pi);
        auto inv = pi.inverse();
        for (std::size_t i = 1; i <= n; ++i) {
            if (c.apply(i) != pi(i)) FAIL("apply(" << i << ")");
            if (c.inverse(i) != inv(i)) FAIL("inverse(" << i << ")");
            if (c.apply(i) != plain.apply(i)) FAIL("differs from runs codec at " << i);
        }
        auto sr = strict_runs(pi);
        CHECK(c.strict_run_count() == sr.count());
        CHECK(c.heads().ones() == c.head_values().ones());
        CHECK(runs(c.inner().decode()).lengths == sr.head_run_lengths);
        CHECK(c.inner().run_count() == runs(pi).count());

        auto bytes = c.to_container().to_bytes();
        auto back = strict_codec::from_container(container::from_bytes(bytes));
        CHECK(back.decode() == pi);
        CHECK(back.to_container().to_bytes() == bytes);
    }
}

TEST_CASE("sort_strict examples and bounds") {
    V a{6, 7, 8, 9, 10, 1, 2, 3, 4, 5};
    auto st = sort_strict(std::span<std::size_t>(a));
    CHECK(std::is_sorted(a.begin(), a.end()));
    // 9 successor tests, then two heads: one detection step and one merge step.
    CHECK(st.comparisons <= 9 + 2);

    V sorted(50);
    std::iota(sorted.begin(), sorted.end(), 1);
    CHECK(sort_strict(std::span<std::size_t>(sorted)).comparisons == 49);

    gen::rng g(6);
    for (int rep = 0; rep < 300; ++rep) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3000)(g);
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(g);
        auto pi = rep % 2 ? gen::strict_mosaic(n, k, g) : gen::uniform(n, g);
        auto sr = strict_runs(pi);
        V x(pi.values().begin(), pi.values().end());
        auto s = sort_strict(std::span<std::size_t>(x));
        CHECK(std::is_sorted(x.begin(), x.end()));
        double m = static_cast<double>(sr.count());
        CHECK(static_cast<double>(s.comparisons) <=
              static_cast<double>(n - 1) + m * (3.0 + entropy(sr.head_run_lengths)));
    }
}

TEST_CASE("corrupted strict container") {
    gen::rng g(1);
    auto c = strict_codec::encode(gen::strict_mosaic(200, 7, g));
    auto cont = c.to_container();
    container broken(structure_tag::strict_codec);
    for (const auto& s : cont.sections())
        if (s.tag != 3) broken.add(s.tag, s.bytes);
    CHECK_THROWS_AS(strict_codec::from_container(broken), format_error);

    container extra = cont;
    extra.add(9, {1, 2, 3});
    CHECK_THROWS_AS(strict_codec::from_container(extra), format_error);
}
