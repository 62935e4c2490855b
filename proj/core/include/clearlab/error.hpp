#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clearlab {

/// Malformed textual input (ring descriptor, element literal, JSON payload).
/// Carries the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Enumeration or exhaustive search requested on a ring containing a Z leaf.
class InfiniteRingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Finite ring too large for the requested exhaustive computation.
class BudgetError : public std::domain_error {
public:
    BudgetError(std::string message, std::uint64_t required)
        : std::domain_error(std::move(message)), required_(required) {}

    std::uint64_t required_budget() const { return required_; }

private:
    std::uint64_t required_;
};

/// Precondition violation carrying the obstruction (e.g. non-unit entry gcd).
class NotFullError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace clearlab
