#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "permc/bitmap.hpp"
#include "permc/errors.hpp"
#include "permc/wavelet_sequence.hpp"

using namespace permc;

namespace {

std::vector<bool> bits_of(const char* s) {
    std::vector<bool> b;
    for (; *s; ++s) b.push_back(*s == '1');
    return b;
}

std::vector<bool> random_bits(std::size_t n, double density, std::mt19937_64& g) {
    std::bernoulli_distribution coin(density);
    std::vector<bool> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = coin(g);
    return b;
}

template <typename BV>
void check_against_scan(const BV& v, const std::vector<bool>& bits) {
    REQUIRE(v.size() == bits.size());
    std::size_t ones = 0;
    CHECK(v.rank1(0) == 0);
    for (std::size_t i = 1; i <= bits.size(); ++i) {
        bool b = bits[i - 1];
        if (v.access(i) != b) FAIL("access mismatch at " << i);
        if (b) {
            ++ones;
            if (v.select1(ones) != i) FAIL("select1(" << ones << ") mismatch");
        } else if (v.select0(i - ones) != i) {
            FAIL("select0(" << i - ones << ") mismatch");
        }
        if (v.rank1(i) != ones) FAIL("rank1(" << i << ") mismatch");
        if (v.rank0(i) + v.rank1(i) != i) FAIL("rank0 + rank1 != i at " << i);
    }
    CHECK(v.ones() == ones);
    CHECK_THROWS_AS((void)v.select1(ones + 1), std::out_of_range);
    CHECK_THROWS_AS((void)v.select0(bits.size() - ones + 1), std::out_of_range);
}

} // namespace

TEST_CASE("bitvector examples") {
    bit_vector a(bits_of("10110"));
    CHECK(a.rank1(3) == 2);
    CHECK(a.select1(3) == 4);

    bit_vector z(bits_of("00000"));
    CHECK(z.rank1(5) == 0);
    CHECK_THROWS_AS((void)z.select1(1), std::out_of_range);

    bit_vector heads(bits_of("1000010000"));
    CHECK(heads.rank1(10) == 2);

    bit_vector b(bits_of("1100"));
    CHECK(b.rank(false, 4) == 2);
    CHECK(b.select(true, 2) == 2);

    bit_vector c(bits_of("101010"));
    CHECK(c.select(false, 3) == 6);
}

TEST_CASE("empty bitvectors") {
    bit_vector e(std::vector<bool>{});
    CHECK(e.size() == 0);
    CHECK(e.rank1(0) == 0);
    CHECK_THROWS_AS((void)e.select1(1), std::out_of_range);
    compressed_bit_vector ce(std::vector<bool>{});
    CHECK(ce.rank1(0) == 0);
    CHECK(ce.payload_bits() == 0);
}

TEST_CASE("rank beyond the end is rejected") {
    bit_vector a(bits_of("101"));
    CHECK_THROWS_AS((void)a.rank1(4), std::out_of_range);
    CHECK_THROWS_AS((void)a.access(0), std::out_of_range);
    compressed_bit_vector c(bits_of("101"));
    CHECK_THROWS_AS((void)c.rank1(4), std::out_of_range);
}

TEST_CASE("plain and compressed bitvectors match a linear scan") {
    std::mt19937_64 g(11);
    for (std::size_t n : {1u, 63u, 64u, 65u, 511u, 512u, 513u, 4097u, 20000u, 65536u}) {
        for (double d : {0.0, 0.01, 0.1, 0.5, 0.9, 1.0}) {
            auto bits = random_bits(n, d, g);
            CAPTURE(n);
            CAPTURE(d);
            bit_vector plain(bits);
            compressed_bit_vector packed(plain);
            check_against_scan(plain, bits);
            check_against_scan(packed, bits);
        }
    }
}

TEST_CASE("compressed payload stays below n on sparse bits") {
    std::mt19937_64 g(5);
    for (std::size_t n : {4096u, 1u << 16}) {
        for (double eps : {0.001, 0.01, 0.05, 0.1}) {
            auto bits = random_bits(n, eps, g);
            compressed_bit_vector c(bits);
            CHECK(c.payload_bits() < n);
            auto blocks = (n + 14) / 15;
            CHECK(static_cast<double>(c.payload_bits()) <= binary_entropy_bits(n, c.ones()) + 5.0 * blocks);
        }
    }
}

TEST_CASE("bitvector serialization round trip") {
    std::mt19937_64 g(3);
    auto bits = random_bits(10000, 0.3, g);
    for (bool compressed : {false, true}) {
        bitmap b(bits, compressed);
        byte_writer w;
        b.serialize(w);
        byte_reader r(w.bytes());
        auto back = bitmap::deserialize(r);
        CHECK(r.at_end());
        byte_writer w2;
        back.serialize(w2);
        CHECK(w.bytes() == w2.bytes());
        CHECK(back.compressed() == compressed);

        auto bytes = w.bytes();
        bytes.resize(bytes.size() - 3);
        byte_reader shortened(bytes);
        CHECK_THROWS_AS(bitmap::deserialize(shortened), format_error);

        auto bad = w.bytes();
        bad[0] = 99;
        byte_reader tagged(bad);
        CHECK_THROWS_AS(bitmap::deserialize(tagged), format_error);
    }
}

TEST_CASE("tampered rank directory is rejected") {
    std::vector<bool> bits(2000, true);
    bit_vector v(bits);
    byte_writer w;
    v.serialize(w);
    auto bytes = w.bytes();
    bytes[bytes.size() - 20] ^= 0x5a;
    byte_reader r(bytes);
    CHECK_THROWS_AS(bit_vector::deserialize(r), format_error);
}

TEST_CASE("wavelet sequence examples") {
    std::vector<std::size_t> labels{1, 2, 1, 2, 1, 2, 1, 2, 1, 2};
    wavelet_sequence s(labels, 2);
    CHECK(s.rank(1, 10) == 5);

    wavelet_sequence empty(std::vector<std::size_t>{}, 3);
    CHECK(empty.size() == 0);
    CHECK(empty.rank(1, 0) == 0);

    std::vector<std::size_t> t{3, 1, 2};
    wavelet_sequence w(t, 3);
    CHECK(w.select(2, 1) == 3);

    std::vector<std::size_t> u{1, 1, 2, 1, 2};
    wavelet_sequence x(u, 2);
    CHECK(x.rank(1, 4) == 3);
    CHECK(x.select(2, 2) == 5);
    CHECK_THROWS_AS((void)x.select(2, 3), std::out_of_range);

    std::vector<std::size_t> bad{1, 4};
    CHECK_THROWS_AS(wavelet_sequence(bad, 3), validation_error);
    std::vector<std::size_t> zero{0};
    CHECK_THROWS_AS(wavelet_sequence(zero, 3), validation_error);
}

TEST_CASE("wavelet sequence matches a linear scan") {
    std::mt19937_64 g(17);
    for (std::size_t r : {1u, 2u, 3u, 7u, 16u, 100u}) {
        for (std::size_t n : {1u, 50u, 4096u}) {
            std::uniform_int_distribution<std::size_t> sym(1, r);
            std::vector<std::size_t> s(n);
            for (auto& c : s) c = sym(g);
            for (bool compressed : {false, true}) {
                wavelet_sequence w(s, r, compressed);
                CAPTURE(r);
                CAPTURE(n);
                std::size_t lg = 0;
                while ((std::size_t{1} << lg) < r) ++lg;
                CHECK(w.depth() == lg);
                std::vector<std::size_t> count(r + 1, 0);
                for (std::size_t i = 1; i <= n; ++i) {
                    std::size_t c = s[i - 1];
                    ++count[c];
                    if (w.access(i) != c) FAIL("access at " << i);
                    if (w.select(c, count[c]) != i) FAIL("select at " << i);
                    if (w.rank(c, i) != count[c]) FAIL("rank at " << i);
                    std::size_t other = c % r + 1;
                    if (w.rank(other, i) != count[other]) FAIL("rank of other symbol at " << i);
                }
                for (std::size_t c = 1; c <= r; ++c) CHECK_THROWS_AS((void)w.select(c, count[c] + 1), std::out_of_range);

                byte_writer out;
                w.serialize(out);
                byte_reader in(out.bytes());
                auto back = wavelet_sequence::deserialize(in);
                byte_writer again;
                back.serialize(again);
                CHECK(out.bytes() == again.bytes());
            }
        }
    }
}
