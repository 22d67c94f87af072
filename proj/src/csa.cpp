#include "permc/csa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permc/errors.hpp"
#include "permc/hu_tucker.hpp"

namespace permc {

namespace {

enum section_tag : std::uint8_t { header = 1, alphabet = 2, marks = 3, row_samples = 4, text_samples = 5, psi_codec = 6 };

// Suffix array (1-based positions) by prefix doubling.
std::vector<std::size_t> suffix_array(const std::vector<csa_index::symbol>& t) {
    const std::size_t n = t.size();
    std::vector<std::size_t> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) rank[i] = t[i];
    for (std::size_t k = 1;; k <<= 1) {
        auto key = [&](std::size_t i) { return std::pair{rank[i], i + k < n ? rank[i + k] + 1 : 0}; };
        std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
        rank.swap(tmp);
        if (rank[sa[n - 1]] == n - 1 || k >= n) break;
    }
    for (auto& p : sa) ++p;
    return sa;
}

} // namespace

std::vector<csa_index::symbol> to_symbols(std::string_view bytes) {
    std::vector<csa_index::symbol> s(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i)
        s[i] = static_cast<csa_index::symbol>(static_cast<unsigned char>(bytes[i]) + 1);
    return s;
}

csa_index csa_index::build(std::string_view text, std::size_t sample, codec_kind psi_codec) {
    if (text.empty()) throw validation_error("csa: empty text");
    auto t = to_symbols(text);
    t.push_back(0);
    const std::size_t n = t.size();

    csa_index x;
    x.sample_ = sample == 0 ? std::max<std::size_t>(1, ceil_log2(n)) : sample;
    auto sa = suffix_array(t);
    std::vector<std::size_t> isa(n + 1);
    for (std::size_t i = 1; i <= n; ++i) isa[sa[i - 1]] = i;

    std::vector<std::size_t> psi(n);
    for (std::size_t i = 1; i <= n; ++i) psi[i - 1] = isa[sa[i - 1] % n + 1];
    x.psi_ = any_codec::encode(permutation(std::move(psi)), psi_codec);

    for (std::size_t i = 1; i <= n; ++i) {
        symbol c = t[sa[i - 1] - 1];
        if (x.symbols_.empty() || x.symbols_.back() != c) {
            x.symbols_.push_back(c);
            x.first_.push_back(i);
        }
    }
    x.first_.push_back(n + 1);

    std::vector<bool> mark(n, false);
    for (std::size_t p = 1; p <= n; p += x.sample_) {
        mark[isa[p] - 1] = true;
        x.text_samples_.push_back(isa[p]);
    }
    x.mark_ = bit_vector(mark);
    for (std::size_t i = 1; i <= n; ++i)
        if (mark[i - 1]) x.row_samples_.push_back(sa[i - 1]);
    return x;
}

csa_index::symbol csa_index::symbol_at_row(std::size_t i) const {
    if (i == 0 || i > size()) throw std::out_of_range("csa: row " + std::to_string(i) + " outside [1," + std::to_string(size()) + "]");
    auto it = std::upper_bound(first_.begin(), first_.end(), i);
    return symbols_[static_cast<std::size_t>(it - first_.begin()) - 1];
}

int csa_index::compare_row(std::size_t i, std::span<const symbol> pattern) const {
    for (std::size_t k = 0; k < pattern.size(); ++k) {
        symbol c = symbol_at_row(i);
        if (c != pattern[k]) return c < pattern[k] ? -1 : 1;
        // The terminator ends every suffix.
        if (c == 0) return k + 1 == pattern.size() ? 0 : -1;
        i = psi(i);
    }
    return 0;
}

std::pair<std::size_t, std::size_t> csa_index::interval(std::span<const symbol> pattern) const {
    std::size_t lo = 1, hi = size() + 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (compare_row(mid, pattern) < 0) lo = mid + 1;
        else hi = mid;
    }
    std::size_t begin = lo;
    hi = size() + 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (compare_row(mid, pattern) <= 0) lo = mid + 1;
        else hi = mid;
    }
    return {begin, lo};
}

std::size_t csa_index::count_symbols(std::span<const symbol> pattern) const {
    auto [lo, hi] = interval(pattern);
    return hi - lo;
}

std::size_t csa_index::count(std::string_view pattern) const {
    auto p = to_symbols(pattern);
    return count_symbols(p);
}

std::size_t csa_index::locate_row(std::size_t i) const {
    std::size_t steps = 0;
    while (!mark_.access(i)) {
        i = psi(i);
        ++steps;
    }
    std::size_t p = row_samples_[mark_.rank1(i) - 1];
    return p > steps ? p - steps : p + size() - steps;
}

std::vector<std::size_t> csa_index::locate_symbols(std::span<const symbol> pattern) const {
    auto [lo, hi] = interval(pattern);
    std::vector<std::size_t> out;
    out.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) out.push_back(locate_row(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> csa_index::locate(std::string_view pattern) const {
    auto p = to_symbols(pattern);
    return locate_symbols(p);
}

std::vector<csa_index::symbol> csa_index::extract(std::size_t l, std::size_t r) const {
    if (l == 0 || l > r || r > size())
        throw std::out_of_range("csa: extract range [" + std::to_string(l) + "," + std::to_string(r) + "] invalid for n = " +
                                std::to_string(size()));
    std::size_t k = (l - 1) / sample_;
    std::size_t row = text_samples_[k];
    for (std::size_t p = 1 + k * sample_; p < l; ++p) row = psi(row);
    std::vector<symbol> out;
    out.reserve(r - l + 1);
    for (std::size_t p = l; p <= r; ++p) {
        out.push_back(symbol_at_row(row));
        if (p < r) row = psi(row);
    }
    return out;
}

std::string csa_index::extract_text(std::size_t l, std::size_t r) const {
    std::string s;
    for (auto c : extract(l, r))
        if (c != 0) s.push_back(static_cast<char>(c - 1));
    return s;
}

space_breakdown csa_index::size_in_bits() const {
    space_breakdown s = psi_.size_in_bits();
    s.payload += mark_.payload_bits();
    s.directories += mark_.directory_bits();
    s.pointers += 64 * (row_samples_.size() + text_samples_.size()) + (16 + 64) * symbols_.size() + 64 * 2;
    return s;
}

container csa_index::to_container() const {
    container c(structure_tag::csa_index);
    byte_writer h;
    h.put_u64(size());
    h.put_u64(sample_);
    c.add(header, std::move(h).bytes());
    byte_writer a;
    a.put_u64(symbols_.size());
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
        a.put_u16(symbols_[k]);
        a.put_u64(first_[k]);
    }
    c.add(alphabet, std::move(a).bytes());
    byte_writer m;
    mark_.serialize(m);
    c.add(marks, std::move(m).bytes());
    byte_writer rs;
    rs.put_words(std::vector<std::uint64_t>(row_samples_.begin(), row_samples_.end()));
    c.add(row_samples, std::move(rs).bytes());
    byte_writer ts;
    ts.put_words(std::vector<std::uint64_t>(text_samples_.begin(), text_samples_.end()));
    c.add(text_samples, std::move(ts).bytes());
    c.add(psi_codec, psi_.to_container().to_bytes());
    return c;
}

csa_index csa_index::from_container(const container& c) {
    static constexpr std::uint8_t allowed[] = {header, alphabet, marks, row_samples, text_samples, psi_codec};
    c.expect(structure_tag::csa_index, allowed);
    csa_index x;
    byte_reader h(c.get(header));
    auto n = static_cast<std::size_t>(h.get_u64());
    x.sample_ = static_cast<std::size_t>(h.get_u64());
    h.expect_end();
    if (n < 2 || x.sample_ == 0) throw format_error("csa: bad header");

    byte_reader a(c.get(alphabet));
    auto sigma = a.get_u64();
    if (sigma == 0 || sigma > 257) throw format_error("csa: bad alphabet size");
    for (std::uint64_t k = 0; k < sigma; ++k) {
        auto sym = a.get_u16();
        auto row = a.get_u64();
        if (sym > 256 || (!x.symbols_.empty() && sym <= x.symbols_.back())) throw format_error("csa: alphabet out of order");
        if (row < 1 || row > n || (!x.first_.empty() && row <= x.first_.back())) throw format_error("csa: bad first rows");
        x.symbols_.push_back(sym);
        x.first_.push_back(static_cast<std::size_t>(row));
    }
    a.expect_end();
    if (x.symbols_.front() != 0 || x.first_.front() != 1 || x.first_.size() < 2 || x.first_[1] != 2)
        throw format_error("csa: terminator must own exactly row 1");
    x.first_.push_back(n + 1);

    byte_reader m(c.get(marks));
    x.mark_ = bit_vector::deserialize(m);
    m.expect_end();
    byte_reader rs(c.get(row_samples));
    auto rows = rs.get_words();
    rs.expect_end();
    byte_reader ts(c.get(text_samples));
    auto texts = ts.get_words();
    ts.expect_end();
    x.psi_ = any_codec::from_container(container::from_bytes(c.get(psi_codec)));

    std::size_t expected = (n - 1) / x.sample_ + 1;
    if (x.mark_.size() != n || x.psi_.size() != n || x.mark_.ones() != expected || rows.size() != expected ||
        texts.size() != expected)
        throw format_error("csa: component sizes do not match");
    for (auto p : rows)
        if (p < 1 || p > n || (p - 1) % x.sample_ != 0) throw format_error("csa: bad row sample");
    for (auto r : texts)
        if (r < 1 || r > n || !x.mark_.access(static_cast<std::size_t>(r))) throw format_error("csa: bad text sample");
    x.row_samples_.assign(rows.begin(), rows.end());
    x.text_samples_.assign(texts.begin(), texts.end());
    return x;
}

} // namespace permc
