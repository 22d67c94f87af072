#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "permc/analysis.hpp"
#include "permc/errors.hpp"
#include "permc/generators.hpp"

using namespace permc;
using V = std::vector<std::size_t>;

namespace {

// Quadratic longest-decreasing-subsequence, independent of the library's
// patience-based oracle.
std::size_t lds_quadratic(const permutation& pi) {
    auto v = pi.values();
    std::vector<std::size_t> best(v.size(), 1);
    std::size_t top = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (v[j] > v[i]) best[i] = std::max(best[i], best[j] + 1);
        top = std::max(top, best[i]);
    }
    return top;
}

} // namespace

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(permutation(V{1, 1}), validation_error);
    CHECK_THROWS_AS(permutation(V{0, 1}), validation_error);
    CHECK_THROWS_AS(permutation(V{1, 3}), validation_error);
    CHECK_NOTHROW(permutation(V{}));
    permutation p(V{3, 1, 2});
    CHECK(p.inverse() == permutation(V{2, 3, 1}));
}

TEST_CASE("runs examples") {
    auto r = runs(permutation(V{1, 3, 5, 7, 9, 2, 4, 6, 8, 10}));
    CHECK(r.count() == 2);
    CHECK(r.lengths == V{5, 5});
    CHECK(r.down_steps == V{5});

    auto id = runs(permutation::identity(7));
    CHECK(id.lengths == V{7});

    auto rev = runs(permutation::reverse(6));
    CHECK(rev.lengths == V(6, 1));

    CHECK(runs(permutation()).count() == 0);
    CHECK(runs(permutation::identity(1)).count() == 1);
}

TEST_CASE("strict runs examples") {
    auto s = strict_runs(permutation(V{6, 7, 8, 9, 10, 1, 2, 3, 4, 5}));
    CHECK(s.count() == 2);
    CHECK(s.lengths == V{5, 5});
    CHECK(s.head_run_lengths == V{1, 1});
    CHECK(s.heads == V{1, 6});

    auto t = strict_runs(permutation(V{1, 3, 5, 7, 9, 2, 4, 6, 8, 10}));
    CHECK(t.count() == 10);
    CHECK(t.lengths == V(10, 1));

    auto id = strict_runs(permutation::identity(9));
    CHECK(id.lengths == V{9});
    CHECK(strict_runs(permutation()).count() == 0);
}

TEST_CASE("shuffled upsequence examples") {
    permutation p(V{1, 6, 2, 7, 3, 8, 4, 9, 5, 10});
    auto s = partition_sus(p);
    CHECK(s.count() == 2);
    CHECK(s.lengths == V{6, 4});
    CHECK(s.labels == V{1, 1, 2, 1, 2, 1, 2, 1, 2, 1});
    CHECK(sus_size_oracle(p) == 2);

    CHECK(partition_sus(permutation::identity(5)).count() == 1);
    CHECK(partition_sus(permutation::reverse(5)).count() == 5);
    CHECK(sus_size_oracle(permutation::identity(5)) == 1);
    CHECK(sus_size_oracle(permutation(V{3, 2, 1})) == 3);
    CHECK(partition_sus(permutation()).count() == 0);
}

TEST_CASE("entropy examples") {
    CHECK(entropy(V{5, 5}) == doctest::Approx(1.0));
    CHECK(entropy(V{17}) == 0.0);
    CHECK(entropy(V{1, 1, 2}) == doctest::Approx(1.5));
    CHECK(entropy(V{}) == 0.0);
    CHECK_THROWS_AS(entropy(V{1, 0}), validation_error);
}

TEST_CASE("decomposition properties on random permutations") {
    gen::rng g(2024);
    for (int rep = 0; rep < 300; ++rep) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, rep < 200 ? 64 : 4096)(g);
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(g);
        permutation pi = rep % 3 == 0 ? gen::uniform(n, g) : rep % 3 == 1 ? gen::k_runs(n, k, g) : gen::k_riffle(n, k, g);
        auto v = pi.values();
        CAPTURE(n);

        auto r = runs(pi);
        CHECK(std::accumulate(r.lengths.begin(), r.lengths.end(), std::size_t{0}) == n);
        CHECK(r.down_steps.size() + 1 == r.count());
        std::size_t pos = 0;
        for (std::size_t t = 0; t < r.count(); ++t) {
            for (std::size_t q = pos + 1; q < pos + r.lengths[t]; ++q) CHECK(v[q - 1] < v[q]);
            pos += r.lengths[t];
            if (t + 1 < r.count()) {
                CHECK(r.down_steps[t] == pos);
                CHECK(v[pos] < v[pos - 1]);
            }
        }

        auto s = strict_runs(pi);
        CHECK(r.count() <= s.count());
        pos = 0;
        for (std::size_t t = 0; t < s.count(); ++t) {
            CHECK(s.heads[t] == pos + 1);
            for (std::size_t q = 1; q < s.lengths[t]; ++q) CHECK(v[pos + q] == v[pos] + q);
            pos += s.lengths[t];
            if (t + 1 < s.count()) CHECK(v[pos] != v[pos - 1] + 1);
        }
        CHECK(pos == n);
        std::vector<std::size_t> head_values;
        for (auto h : s.heads) head_values.push_back(v[h - 1]);
        CHECK(runs(permutation([&] {
                  // rank-reduce the head values to a permutation
                  std::vector<std::size_t> order(head_values.size());
                  std::iota(order.begin(), order.end(), std::size_t{0});
                  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return head_values[a] < head_values[b]; });
                  std::vector<std::size_t> reduced(head_values.size());
                  for (std::size_t q = 0; q < order.size(); ++q) reduced[order[q]] = q + 1;
                  return reduced;
              }()))
                  .lengths == s.head_run_lengths);
        CHECK(s.head_run_lengths.size() == r.count());

        auto p = partition_sus(pi);
        std::vector<std::size_t> last(p.count() + 1, 0), seen(p.count() + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto c = p.labels[i];
            REQUIRE(c >= 1);
            REQUIRE(c <= p.count());
            CHECK(last[c] < v[i]);
            last[c] = v[i];
            ++seen[c];
        }
        for (std::size_t c = 1; c <= p.count(); ++c) CHECK(seen[c] == p.lengths[c - 1]);
        CHECK(p.count() == sus_size_oracle(pi));
        if (n <= 512) CHECK(sus_size_oracle(pi) == lds_quadratic(pi));

        for (const auto* x : {&r.lengths, &s.lengths, &p.lengths}) {
            double h = entropy(*x);
            double rr = static_cast<double>(x->size());
            CHECK(h <= std::log2(rr) + 1e-9);
            // H is concave over compositions, so its minimum sits at
            // <n - r + 1, 1, ..., 1>, giving (r - 1) lg n / n.
            CHECK(h >= (rr - 1) * std::log2(static_cast<double>(n)) / static_cast<double>(n) - 1e-9);
        }
    }
}

TEST_CASE("entropy lower bound is (r - 1) lg n / n, not r lg n / n") {
    // One part: H = 0 < lg n / n.
    CHECK(entropy(V{16}) < std::log2(16.0) / 16.0);
    // <n - 1, 1> attains about (lg n + lg e) / n.
    double n = 1024;
    double h = entropy(V{1023, 1});
    CHECK(h < 2 * std::log2(n) / n);
    CHECK(h >= std::log2(n) / n);
}
