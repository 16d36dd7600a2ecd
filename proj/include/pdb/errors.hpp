// errors.hpp -- exception types shared by every module of the library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdb {

/// Malformed or out-of-domain input (bad vector syntax, unknown letter,
/// mismatched orders, ...).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A size bound was exceeded (binomial overflow, grid too large for a
/// dense table, enumeration gate).
class CapacityError : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// The request is well formed but the operation does not support it
/// (2D layout for sigma != 3, a construction family outside its range).
class UnsupportedError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A walk was asked to spell a word but spells none.
class RealizabilityError : public std::runtime_error
{
public:
    RealizabilityError(const std::string &what, std::size_t constraint)
      : std::runtime_error(what), _constraint(constraint)
    {
    }

    /// Index of the smallest violated constraint.
    std::size_t constraint() const noexcept { return _constraint; }

private:
    std::size_t _constraint;
};

/// A self-check on a produced artifact failed. Indicates a bug.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace pdb
