#pragma once

#include <stdexcept>
#include <string>

namespace osgm {

/// Malformed input: bad files, out-of-range parameters, dimension mismatches.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of a construction does not hold for the data
/// supplied (ideal not preserved, principal dependence not unique, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace osgm
