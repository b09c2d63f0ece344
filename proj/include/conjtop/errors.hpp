#pragma once

#include <stdexcept>
#include <string>

namespace conjtop {

/// Malformed input: bad dimensions, failed preconditions, unresolved names.
/// Maps to CLI exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but contradicts a theorem that holds for every
/// genuine real structure (Harnack bound, Kharlamov congruence, ...).
/// Maps to CLI exit status 1.
class ModelIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an involution fixes a simplex setwise but not pointwise, or
/// when two orbits of simplices project onto the same vertex set.
class NonRegularInvolution : public InputError {
 public:
  NonRegularInvolution(const std::string& what, std::string offending)
      : InputError(what + ": " + offending), offending_(std::move(offending)) {}
  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

}  // namespace conjtop
