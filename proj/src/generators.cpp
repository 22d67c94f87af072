#include "permc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace permc::gen {

permutation identity(std::size_t n) { return permutation::identity(n); }

permutation reverse(std::size_t n) { return permutation::reverse(n); }

permutation uniform(std::size_t n, rng& g) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    std::shuffle(v.begin(), v.end(), g);
    return permutation(std::move(v));
}

std::vector<std::size_t> dirichlet_lengths(std::size_t n, std::size_t k, rng& g) {
    k = std::clamp<std::size_t>(k, n == 0 ? 0 : 1, n);
    std::vector<std::size_t> len(k, 1);
    if (k == 0) return len;
    std::gamma_distribution<double> gamma(1.0, 1.0);
    std::vector<double> w(k);
    double total = 0;
    for (auto& x : w) total += (x = gamma(g));
    std::size_t spare = n - k, used = 0;
    for (std::size_t t = 0; t < k; ++t) {
        auto extra = static_cast<std::size_t>(std::floor(static_cast<double>(spare) * w[t] / total));
        len[t] += extra;
        used += extra;
    }
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (; used < spare; ++used) ++len[pick(g)];
    return len;
}

permutation k_runs(std::size_t n, std::size_t k, rng& g) {
    auto len = dirichlet_lengths(n, k, g);
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    std::shuffle(v.begin(), v.end(), g);
    std::size_t pos = 0;
    for (auto l : len) {
        std::sort(v.begin() + static_cast<std::ptrdiff_t>(pos), v.begin() + static_cast<std::ptrdiff_t>(pos + l));
        pos += l;
    }
    return permutation(std::move(v));
}

permutation k_riffle(std::size_t n, std::size_t k, rng& g) {
    auto len = dirichlet_lengths(n, k, g);
    std::vector<std::size_t> owner;
    owner.reserve(n);
    for (std::size_t t = 0; t < len.size(); ++t) owner.insert(owner.end(), len[t], t);
    std::shuffle(owner.begin(), owner.end(), g);
    std::vector<std::size_t> next(len.size(), 1);
    for (std::size_t t = 1; t < len.size(); ++t) next[t] = next[t - 1] + len[t - 1];
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = next[owner[i]]++;
    return permutation(std::move(v));
}

permutation strict_mosaic(std::size_t n, std::size_t k, rng& g) {
    auto len = dirichlet_lengths(n, k, g);
    std::vector<std::size_t> first(len.size(), 1);
    for (std::size_t t = 1; t < len.size(); ++t) first[t] = first[t - 1] + len[t - 1];
    std::vector<std::size_t> order(len.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), g);
    std::vector<std::size_t> v;
    v.reserve(n);
    for (auto t : order)
        for (std::size_t d = 0; d < len[t]; ++d) v.push_back(first[t] + d);
    return permutation(std::move(v));
}

std::vector<std::size_t> zipf_text(std::size_t n, std::size_t vocab, double s, rng& g) {
    if (vocab == 0) throw std::invalid_argument("zipf_text: empty vocabulary");
    std::vector<double> w(vocab);
    for (std::size_t r = 0; r < vocab; ++r) w[r] = 1.0 / std::pow(static_cast<double>(r + 1), s);
    std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
    std::unordered_map<std::size_t, std::size_t> id;
    std::vector<std::size_t> text(n);
    for (auto& t : text) {
        auto raw = dist(g);
        auto [it, fresh] = id.try_emplace(raw, id.size() + 1);
        t = it->second;
    }
    return text;
}

permutation by_name(const std::string& name, std::size_t n, std::size_t k, rng& g) {
    if (name == "identity") return identity(n);
    if (name == "reverse") return reverse(n);
    if (name == "random") return uniform(n, g);
    if (name == "k-runs") return k_runs(n, k, g);
    if (name == "k-riffle") return k_riffle(n, k, g);
    if (name == "strict") return strict_mosaic(n, k, g);
    throw std::invalid_argument("unknown generator '" + name + "'");
}

} // namespace permc::gen
