#pragma once

#include <stdexcept>
#include <string>

namespace glsc {

// Common base so callers can catch everything coming out of this library
// with one handler while still discriminating when they care.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Map/partition evaluated outside its domain.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Message whose empirical distribution cannot be coded (all zeros / all ones
// / empty), or counts that imply such a distribution.
struct DegenerateSourceError : Error {
    explicit DegenerateSourceError(const std::string& what) : Error(what) {}
};

// Parameter outside its contract (p not in (0,1), eps out of range, n < 2, ...).
struct InvalidParameterError : Error {
    explicit InvalidParameterError(const std::string& what) : Error(what) {}
};

// Malformed container bytes: bad magic, unknown version, truncated fields.
struct ContainerFormatError : Error {
    explicit ContainerFormatError(const std::string& what) : Error(what) {}
};

// Malformed message file framing (the 8-byte-count + packed-bits format).
struct FramingError : Error {
    explicit FramingError(const std::string& what) : Error(what) {}
};

// Bad experiment configuration.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace glsc
