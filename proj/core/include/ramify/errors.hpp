#ifndef RAMIFY_ERRORS_HPP
#define RAMIFY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramify
{

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle strings, polynomials, cover files).
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t position = npos)
  : Error(position == npos ? what
                           : what + " (at position " + std::to_string(position) + ")"),
    _position(position)
  {}

  std::size_t position() const { return _position; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t _position;
};

class DegreeMismatch : public Error
{
public:
  using Error::Error;
};

/// Data that breaks a structural invariant (invalid cover, element outside
/// a group, bad partition, ...).
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// Riemann-Hurwitz (or a similar count) produced an impossible value.
class ModelInconsistency : public Error
{
public:
  using Error::Error;
};

/// A verified statement failed on concrete data. Never expected to fire.
class TheoremViolation : public Error
{
public:
  using Error::Error;
};

class CapExceeded : public Error
{
public:
  using Error::Error;
};

class Infeasible : public Error
{
public:
  using Error::Error;
};

class NonGenericProjection : public Error
{
public:
  using Error::Error;
};

class SingularCurve : public NonGenericProjection
{
public:
  using NonGenericProjection::NonGenericProjection;
};

class TrackingAmbiguity : public Error
{
public:
  using Error::Error;
};

class RelationViolation : public Error
{
public:
  using Error::Error;
};

} // namespace ramify

#endif // RAMIFY_ERRORS_HPP
