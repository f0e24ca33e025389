#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperphase {

// Base of every exception the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input lies outside the domain of a map (e.g. Im z <= 0 for the half-plane).
class DomainError : public Error {
public:
    using Error::Error;
};

// A Mobius matrix with (near) zero determinant.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Motion construction or classification failed (identity, not an h-motion, ...).
class MotionError : public Error {
public:
    using Error::Error;
};

// Invalid scene: bad ranges, incompatible options, invalid composites.
class SceneError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hyperphase
