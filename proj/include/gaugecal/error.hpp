/**
 * @file error.hpp
 * @brief Exception hierarchy shared by all gaugecal modules
 */

#pragma once

#include <stdexcept>
#include <string>

namespace gaugecal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Input data is malformed or violates a domain invariant.
class DataError : public Error {
public:
    using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gaugecal
