#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "permc/analysis.hpp"
#include "permc/csa.hpp"
#include "permc/errors.hpp"

using namespace permc;
using V = std::vector<std::size_t>;

namespace {

// Psi from a suffix array sorted by direct suffix comparison; the
// terminator sorts below every byte.
V brute_psi(const std::string& text) {
    std::string t = text;
    const std::size_t n = t.size() + 1;
    V sa(n);
    for (std::size_t i = 0; i < n; ++i) sa[i] = i + 1;
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
        auto sa_ = std::string_view(t).substr(a - 1);
        auto sb = std::string_view(t).substr(b - 1);
        // Compare as unsigned bytes; a proper prefix sorts first.
        return std::lexicographical_compare(sa_.begin(), sa_.end(), sb.begin(), sb.end(), [](char x, char y) {
            return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
        });
    });
    V isa(n + 1);
    for (std::size_t i = 0; i < n; ++i) isa[sa[i]] = i + 1;
    V psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = isa[sa[i] % n + 1];
    return psi;
}

V naive_locate(const std::string& text, const std::string& pat) {
    V out;
    if (pat.size() > text.size()) return out;
    for (std::size_t p = 0; p + pat.size() <= text.size(); ++p)
        if (text.compare(p, pat.size(), pat) == 0) out.push_back(p + 1);
    return out;
}

std::string random_text(std::size_t n, int sigma, std::mt19937_64& g) {
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string s(n, 'a');
    for (auto& c : s) c = static_cast<char>('a' + d(g));
    return s;
}

} // namespace

TEST_CASE("csa_build examples") {
    auto x = csa_index::build("aba");
    CHECK(x.size() == 4);
    V psi;
    for (std::size_t i = 1; i <= 4; ++i) psi.push_back(x.psi(i));
    CHECK(psi == V{3, 1, 4, 2});
    CHECK(brute_psi("aba") == V{3, 1, 4, 2});

    auto y = csa_index::build("a");
    CHECK(y.size() == 2);
    CHECK(y.psi(1) == 2);
    CHECK(y.psi(2) == 1);

    CHECK_THROWS_AS(csa_index::build(""), validation_error);
}

TEST_CASE("count, locate and extract on abracadabra") {
    std::string t = "abracadabra";
    for (auto kind : {codec_kind::runs, codec_kind::strict}) {
        for (std::size_t s : {0u, 1u, 3u, 20u}) {
            auto x = csa_index::build(t, s, kind);
            CHECK(x.count("abra") == 2);
            CHECK(x.locate("abra") == V{1, 8});
            CHECK(x.count(t) == 1);
            CHECK(x.count("xyz") == 0);
            CHECK(x.locate("xyz").empty());
            CHECK(x.extract_text(4, 7) == "acad");
            CHECK(x.extract_text(1, 12) == t);
            CHECK(x.extract_text(5, 5) == "c");
            std::vector<csa_index::symbol> term{0};
            CHECK(x.locate_symbols(term) == V{12});
            auto all = x.extract(1, 12);
            CHECK(all.back() == 0);
            CHECK(x.count("") == 12);
            CHECK_THROWS_AS((void)x.extract(0, 3), std::out_of_range);
            CHECK_THROWS_AS((void)x.extract(3, 13), std::out_of_range);
        }
    }
}

TEST_CASE("psi walks every text position once") {
    std::string t = "mississippi";
    auto x = csa_index::build(t);
    std::size_t n = x.size();
    std::vector<bool> seen(n + 1, false);
    std::size_t row = 1;  // the terminator's row
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(!seen[row]);
        seen[row] = true;
        CHECK(x.psi_inverse(x.psi(row)) == row);
        row = x.psi(row);
    }
    CHECK(row == 1);
    auto one = csa_index::build("aaaa");
    // A one-symbol text makes psi a rotation: row i holds the suffix of
    // length i, so psi(i) = i - 1 and psi(1) = n.
    for (std::size_t i = 1; i <= 5; ++i) CHECK(one.psi(i) == (i + 3) % 5 + 1);
}

TEST_CASE("csa agrees with brute force on random texts") {
    std::mt19937_64 g(2718);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = rep < 55 ? std::uniform_int_distribution<std::size_t>(1, 400)(g) : std::size_t{1} << 14;
        int sigma = std::uniform_int_distribution<int>(1, 26)(g);
        auto t = random_text(n, sigma, g);
        auto x = csa_index::build(t, 0, rep % 2 ? codec_kind::strict : codec_kind::runs);
        auto want = brute_psi(t);
        V got(want.size());
        for (std::size_t i = 1; i <= want.size(); ++i) got[i - 1] = x.psi(i);
        CHECK(got == want);
        CHECK(runs(permutation(want)).count() <= x.alphabet_size());
        for (int q = 0; q < 10; ++q) {
            std::size_t len = std::uniform_int_distribution<std::size_t>(1, 6)(g);
            std::string pat;
            if (q % 2 == 0 && len <= n) {
                std::size_t at = std::uniform_int_distribution<std::size_t>(0, n - len)(g);
                pat = t.substr(at, len);
            } else {
                pat = random_text(len, sigma + 1, g);
            }
            auto occ = naive_locate(t, pat);
            CHECK(x.count(pat) == occ.size());
            CHECK(x.locate(pat) == occ);
            std::size_t l = std::uniform_int_distribution<std::size_t>(1, n)(g);
            std::size_t r = std::uniform_int_distribution<std::size_t>(l, n)(g);
            CHECK(x.extract_text(l, r) == t.substr(l - 1, r - l + 1));
        }
        auto bytes = x.to_container().to_bytes();
        auto back = csa_index::from_container(container::from_bytes(bytes));
        CHECK(back.to_container().to_bytes() == bytes);
        CHECK(back.extract_text(1, back.size()) == t);
    }
}

TEST_CASE("binary bytes survive") {
    std::string t;
    for (int c = 255; c >= 0; --c) t.push_back(static_cast<char>(c));
    t += t;
    auto x = csa_index::build(t, 5);
    CHECK(x.alphabet_size() == 257);
    CHECK(x.extract_text(1, x.size()) == t);
    CHECK(x.count(std::string(1, '\0')) == 2);
    CHECK(x.locate(std::string("\xff\xfe", 2)) == V{1, 257});
}
