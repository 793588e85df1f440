#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prymtyurin
{

//! Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! A precondition of an operation was violated by the caller.
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

//! Malformed group, subgroup or cycle text. Carries the offending offset.
class ParseError : public Error
{
  public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")")
        , position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

//! A configured resource cap (group order, search budget) was hit.
class CapExceeded : public Error
{
  public:
    using Error::Error;
};

//! A mathematical identity that must hold did not. Always a bug.
class InternalFault : public Error
{
  public:
    using Error::Error;
};

//! The input triple does not satisfy the standing hypothesis.
class HypothesisViolation : public Error
{
  public:
    using Error::Error;
};

}  // namespace prymtyurin
