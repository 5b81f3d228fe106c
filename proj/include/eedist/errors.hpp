#pragma once

#include <stdexcept>

namespace eedist {

// Bad argument or parameter combination supplied by the caller.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Filesystem-level failure (missing or unreadable file).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed content in an input file; the message carries the line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eedist
