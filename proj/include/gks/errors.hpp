#pragma once

#include <stdexcept>
#include <string>

namespace gks {

/// Base of every error the library throws.
class Error : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

/// Density or internal energy (pressure) is not positive.
class NonPhysicalState : public Error
{
 public:
  using Error::Error;
};

/// The 4x4 moment matrix could not be factorized (non-physical lambda).
class SingularMomentSystem : public Error
{
 public:
  using Error::Error;
};

/// Malformed run configuration or boundary setup.
class ConfigError : public Error
{
 public:
  using Error::Error;
};

class IoError : public Error
{
 public:
  using Error::Error;
};

/// The two Riemann states separate into vacuum.
class VacuumFormation : public Error
{
 public:
  using Error::Error;
};

/// A convergence order was requested from a zero error.
class DegenerateError : public Error
{
 public:
  using Error::Error;
};

class NoVortexFound : public Error
{
 public:
  using Error::Error;
};

} // namespace gks
