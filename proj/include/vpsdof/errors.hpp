#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vpsdof {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates its invariant. `key()` names the offending field
/// using the config-file spelling, e.g. "integrator.alpha".
class ValidationError : public Error {
 public:
  ValidationError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Residual values at the bracket ends share a sign.
class NoBracket : public Error {
 public:
  using Error::Error;
};

/// Root solve ran out of iterations. Carries the best iterate found.
class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, double best, double residual)
      : Error(what), best_(best), residual_(residual) {}
  double best_iterate() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_;
  double residual_;
};

/// A reference time step does not evenly divide a coarse one.
class NotCommensurate : public Error {
 public:
  using Error::Error;
};

/// Two trajectories are not sampled on the same time grid.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A time step failed inside a run. Wraps the underlying message.
class StepFailure : public Error {
 public:
  StepFailure(std::size_t step_index, const std::string& what)
      : Error("step " + std::to_string(step_index) + ": " + what),
        step_index_(step_index) {}
  std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_;
};

}  // namespace vpsdof
