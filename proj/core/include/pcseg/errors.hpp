#pragma once

#include <stdexcept>
#include <string>

namespace pcseg {

/// Argument outside the documented contract of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Empty pixel sequence where at least one pixel is required.
class EmptyImageError : public std::invalid_argument {
public:
    EmptyImageError() : std::invalid_argument("empty image") {}
    using std::invalid_argument::invalid_argument;
};

/// Malformed or truncated file content.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal bookkeeping; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pcseg
