#pragma once

#include <stdexcept>
#include <string>

namespace rbx {

/// Base of every error raised by the library. Failed identity checks are
/// results, not errors, and never throw.
class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad flag values, bounds exceeded, unsupported
/// model/suite combinations. Maps to exit code 2.
class ConfigError : public Error
{
  public:
	using Error::Error;
};

/// Argument outside the domain of a mathematical operation (log of a series
/// without unit constant term, ...).
class DomainError : public Error
{
  public:
	using Error::Error;
};

class PreconditionError : public Error
{
  public:
	using Error::Error;
};

class BoundsError : public Error
{
  public:
	using Error::Error;
};

/// Shape mismatch between operands (series orders, window lengths, matrix
/// dimensions, degree caps).
class StructuralError : public Error
{
  public:
	using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error
{
  public:
	using Error::Error;
};

} // namespace rbx
