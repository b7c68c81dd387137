#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patchecg {

using i64 = std::int64_t;

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or rank mismatch between tensor operands.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent on-disk data (CSV, manifest, checkpoint).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

// Non-finite value observed while finite checks are enabled.
class NonFiniteError : public Error {
public:
    explicit NonFiniteError(const std::string& msg) : Error(msg) {}
};

}  // namespace patchecg
