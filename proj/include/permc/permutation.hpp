#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace permc {

// A permutation of [n] in plain array form. Positions and values are
// 1-based: at(i) is pi(i).
class permutation {
public:
    permutation() = default;
    // Throws validation_error unless `values` holds each of 1..n exactly once.
    explicit permutation(std::vector<std::size_t> values);

    static permutation identity(std::size_t n);
    static permutation reverse(std::size_t n);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] bool empty() const { return values_.empty(); }
    [[nodiscard]] std::size_t at(std::size_t i) const;
    [[nodiscard]] std::size_t operator()(std::size_t i) const { return values_[i - 1]; }
    [[nodiscard]] std::span<const std::size_t> values() const { return values_; }
    [[nodiscard]] permutation inverse() const;

    friend bool operator==(const permutation&, const permutation&) = default;

private:
    struct trusted {};
    permutation(std::vector<std::size_t> values, trusted) : values_(std::move(values)) {}

    std::vector<std::size_t> values_;
};

} // namespace permc
