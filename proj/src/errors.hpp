// errors.hpp — error types shared across the library core
#pragma once

#include <stdexcept>

namespace qslcv {

// Thrown when an iterative numerical procedure fails to converge or
// produces non-finite values. Distinct from std::domain_error, which
// signals an input outside an operation's mathematical domain.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File-system failures (open/write).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qslcv
