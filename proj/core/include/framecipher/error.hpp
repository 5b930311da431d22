#pragma once

#include <stdexcept>
#include <string>

namespace framecipher {

/// Base class for failures raised by the cipher and attack code. Argument and
/// precondition violations use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact integer computation left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Wrong key, corrupted ciphertext, rank deficiency or any other outcome that
/// means the cryptographic computation cannot produce a valid answer.
class CryptoError : public Error {
public:
    using Error::Error;
};

} // namespace framecipher
