#include "permc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "permc/errors.hpp"

namespace permc {

run_decomposition runs(const permutation& pi) {
    run_decomposition d;
    std::uint64_t unused = 0;
    d.lengths = detect_runs(pi.values(), unused);
    std::size_t pos = 0;
    for (std::size_t k = 0; k + 1 < d.lengths.size(); ++k) {
        pos += d.lengths[k];
        d.down_steps.push_back(pos);
    }
    return d;
}

strict_run_decomposition strict_runs(const permutation& pi) {
    strict_run_decomposition d;
    auto v = pi.values();
    if (v.empty()) return d;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= v.size(); ++i) {
        if (i == v.size() || v[i] != v[i - 1] + 1) {
            d.heads.push_back(start + 1);
            d.lengths.push_back(i - start);
            start = i;
        }
    }
    std::vector<std::size_t> head_values;
    head_values.reserve(d.heads.size());
    for (auto h : d.heads) head_values.push_back(v[h - 1]);
    std::uint64_t unused = 0;
    d.head_run_lengths = detect_runs(std::span<const std::size_t>(head_values), unused);
    return d;
}

sus_partition partition_sus(const permutation& pi) {
    std::uint64_t unused = 0;
    return greedy_sus_partition(pi.values(), unused);
}

double entropy(std::span<const std::size_t> x) {
    double n = 0;
    for (auto v : x) {
        if (v == 0) throw validation_error("entropy: zero entry");
        n += static_cast<double>(v);
    }
    double h = 0;
    for (auto v : x) {
        double p = static_cast<double>(v) / n;
        h += p * std::log2(1.0 / p);
    }
    return h;
}

std::size_t sus_size_oracle(const permutation& pi) {
    // Patience-style longest strictly decreasing subsequence: tails[k] is the
    // largest possible last value of a decreasing subsequence of length k+1.
    std::vector<std::size_t> tails;
    for (auto v : pi.values()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v, std::greater<>());
        if (it == tails.end()) tails.push_back(v);
        else *it = v;
    }
    return tails.size();
}

} // namespace permc
