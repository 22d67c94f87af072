#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "permc/errors.hpp"
#include "permc/generators.hpp"
#include "permc/sus_codec.hpp"

using namespace permc;
using V = std::vector<std::size_t>;

TEST_CASE("encode_sus examples") {
    permutation p(V{1, 6, 2, 7, 3, 8, 4, 9, 5, 10});
    auto c = sus_codec::encode(p);
    CHECK(c.sus_count() == 2);
    CHECK(c.inner().decode() == permutation(V{1, 6, 7, 8, 9, 10, 2, 3, 4, 5}));
    CHECK(c.offset(1) == 0);
    CHECK(c.offset(2) == 6);
    CHECK(c.apply(2) == 6);
    CHECK(c.apply(10) == 10);
    CHECK(c.inverse(6) == 2);

    auto id = sus_codec::encode(permutation::identity(9));
    CHECK(id.sus_count() == 1);
    for (std::size_t i = 1; i <= 9; ++i) {
        CHECK(id.labels().access(i) == 1);
        CHECK(id.apply(i) == i);
        CHECK(id.inverse(i) == i);
    }
    CHECK(id.inner().decode() == permutation::identity(9));

    auto sw = sus_codec::encode(permutation(V{2, 1}));
    CHECK(sw.sus_count() == 2);
    CHECK(sw.labels().access(1) == 1);
    CHECK(sw.labels().access(2) == 2);
    CHECK(sw.inner().decode() == permutation(V{2, 1}));

    CHECK_THROWS_AS((void)c.apply(11), std::out_of_range);
    CHECK_THROWS_AS((void)c.inverse(0), std::out_of_range);
    auto e = sus_codec::encode(permutation());
    CHECK(e.size() == 0);
    CHECK(e.decode() == permutation());
}

TEST_CASE("sus codec round trip, consistency and space") {
    gen::rng g(21);
    for (int rep = 0; rep < 120; ++rep) {
        std::size_t n = rep < 100 ? std::uniform_int_distribution<std::size_t>(1, 700)(g) : std::size_t{1} << 14;
        std::size_t ks[] = {2, 4, 8, 16};
        permutation pi = rep % 5 == 4 ? gen::uniform(n, g) : gen::k_riffle(n, ks[rep % 4], g);
        CAPTURE(n);
        auto c = sus_codec::encode(pi, rep % 2 == 0, rep % 3 == 0);
        auto inv = pi.inverse();
        for (std::size_t i = 1; i <= n; ++i) {
            if (c.apply(i) != pi(i)) FAIL("apply(" << i << ")");
            if (c.inverse(i) != inv(i)) FAIL("inverse(" << i << ")");
        }
        auto part = partition_sus(pi);
        CHECK(c.sus_count() == part.count());
        CHECK(c.sus_count() == sus_size_oracle(pi));
        CHECK(runs(c.inner().decode()).count() <= c.sus_count());

        // Re-interleave pi' by S.
        auto concat = c.inner().decode();
        V rebuilt(n);
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t l = c.labels().access(i);
            rebuilt[i - 1] = concat(c.offset(l) + c.labels().rank(l, i));
            std::size_t p = concat.inverse()(pi(i));
            std::size_t hi = l < c.sus_count() ? c.offset(l + 1) : n;
            CHECK(c.offset(l) < p);
            CHECK(p <= hi);
        }
        CHECK(permutation(rebuilt) == pi);

        double h = entropy(part.lengths);
        double sigma = static_cast<double>(part.count());
        auto s = c.size_in_bits();
        CHECK(static_cast<double>(s.payload) <=
              2.0 * static_cast<double>(n) * (1.0 + h) + static_cast<double>(s.directories) +
                  sigma * std::ceil(std::log2(static_cast<double>(n) + 1)));

        auto bytes = c.to_container().to_bytes();
        auto back = sus_codec::from_container(container::from_bytes(bytes));
        CHECK(back.decode() == pi);
        CHECK(back.to_container().to_bytes() == bytes);
    }
}

TEST_CASE("sort_sus examples and bounds") {
    V a{1, 6, 2, 7, 3, 8, 4, 9, 5, 10};
    auto st = sort_sus(std::span<std::size_t>(a));
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(static_cast<double>(st.comparisons) <= 10.0 * (3.0 + 2.0 * entropy(V{6, 4})));

    V sorted(64);
    std::iota(sorted.begin(), sorted.end(), 1);
    CHECK(sort_sus(std::span<std::size_t>(sorted)).comparisons == 63);

    for (std::size_t n : {2u, 10u, 1000u}) {
        V rev(n);
        std::iota(rev.rbegin(), rev.rend(), 1);
        auto s = sort_sus(std::span<std::size_t>(rev));
        CHECK(std::is_sorted(rev.begin(), rev.end()));
        CHECK(s.comparisons <= n - 1 + n * ceil_log2(n) + 2 * n);
    }

    gen::rng g(5);
    for (int rep = 0; rep < 300; ++rep) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3000)(g);
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, 64)(g);
        auto pi = rep % 3 == 0 ? gen::uniform(n, g) : gen::k_riffle(n, k, g);
        auto part = partition_sus(pi);
        V x(pi.values().begin(), pi.values().end());
        auto s = sort_sus(std::span<std::size_t>(x));
        CHECK(std::is_sorted(x.begin(), x.end()));
        double nn = static_cast<double>(n);
        double sigma = static_cast<double>(part.count());
        double guard = sigma > nn / 2 ? nn * std::ceil(std::log2(sigma)) : 0.0;
        CAPTURE(n);
        CAPTURE(sigma);
        CHECK(static_cast<double>(s.comparisons) <= nn * (3.0 + 2.0 * entropy(part.lengths)) + guard);
    }
}
