#pragma once

#include <stdexcept>
#include <string>

namespace dvblab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two elements that must sit over the same fiber point do not.
struct FiberMismatch : Error {
    explicit FiberMismatch(const std::string& msg) : Error(msg) {}
};

/// Dimensions of maps/vectors do not compose.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotSurjective : Error {
    explicit NotSurjective(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

struct SequenceNotExact : Error {
    explicit SequenceNotExact(const std::string& msg) : Error(msg) {}
};

/// A dual was requested over a zero side bundle where the defining data
/// (the certified covector) is not unique.
struct DegenerateSide : Error {
    explicit DegenerateSide(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace dvblab
