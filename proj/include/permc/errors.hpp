#pragma once

#include <stdexcept>
#include <string>

namespace permc {

// Input is not what an operation requires (non-permutation, symbol outside
// the alphabet, zero frequency, ...).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A serialized blob is truncated, has a bad magic, an unknown tag or
// an unsupported version.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace permc
