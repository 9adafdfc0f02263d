#pragma once

#include <stdexcept>
#include <string>

namespace hzero {

// Bad arguments: out-of-range indices, degree mismatch, malformed shapes.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computed structure contradicts a known theorem; always a bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Brute-force work refused because it exceeds the configured bound.
class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hzero
