#pragma once

#include <stdexcept>
#include <string>

namespace sspec {

/// Base of all library errors; the CLI maps any of these to exit code 2.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: out-of-range index, ring mismatch, malformed precondition.
class invalid_parameter_error : public error {
 public:
  using error::error;
};

/// A configured size or search cap would be exceeded.
class capacity_error : public error {
 public:
  using error::error;
};

/// A ring or morphism axiom failed; the message names the axiom and a witness.
class validation_error : public error {
 public:
  using error::error;
};

/// Candidate generators of a multiplicative set reach zero under products.
class invalid_multset_error : public error {
 public:
  using error::error;
};

/// Malformed input file: bad JSON, unknown keys, wrong field types.
class input_error : public error {
 public:
  using error::error;
};

}  // namespace sspec
