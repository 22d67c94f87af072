#include "permc/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "permc/errors.hpp"

namespace permc {

permutation::permutation(std::vector<std::size_t> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = values_[i];
        if (v < 1 || v > n)
            throw validation_error("value " + std::to_string(v) + " at position " + std::to_string(i + 1) +
                                   " outside [1," + std::to_string(n) + "]");
        if (seen[v])
            throw validation_error("value " + std::to_string(v) + " repeated at position " + std::to_string(i + 1));
        seen[v] = true;
    }
}

permutation permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return {std::move(v), trusted{}};
}

permutation permutation::reverse(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = n - i;
    return {std::move(v), trusted{}};
}

std::size_t permutation::at(std::size_t i) const {
    if (i == 0 || i > values_.size()) throw std::out_of_range("permutation: position " + std::to_string(i));
    return values_[i - 1];
}

permutation permutation::inverse() const {
    std::vector<std::size_t> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = i + 1;
    return {std::move(inv), trusted{}};
}

} // namespace permc
