#pragma once

#include <stdexcept>
#include <string>

namespace rht {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different generator sets.
class ContextError : public Error {
public:
    using Error::Error;
};

/// Malformed expression or document. `position` is a 0-based character
/// offset into the parsed text (or -1 when unknown); `field` names the
/// offending document field as a JSON pointer when applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long position = -1, std::string field = {})
        : Error(what), position_(position), field_(std::move(field)) {}
    long position() const noexcept { return position_; }
    const std::string& field() const noexcept { return field_; }

private:
    long position_;
    std::string field_;
};

/// Inhomogeneous element or wrong degree where a fixed degree is required.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// Structural invariant violated (d^2 != 0, non-associative table, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A map of algebras fails to commute with the differentials.
class ChainMapError : public Error {
public:
    using Error::Error;
};

/// sigma_normalize: [sigma(x)] does not vanish, so the component cannot be
/// moved to the constant one.
class ComponentObstruction : public Error {
public:
    using Error::Error;
};

}  // namespace rht
