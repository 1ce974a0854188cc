#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dddp {

/// Base class for every error raised by the solvers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the potential or a numeric argument was violated.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// A function evaluated on a grid returned NaN or infinity.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An amplitude was evaluated on (or numerically at) one of its poles.
class PoleHit : public Error {
 public:
  using Error::Error;
};

/// A complex-plane search found fewer roots than requested.
class SearchIncomplete : public Error {
 public:
  SearchIncomplete(const std::string& what, std::size_t found, std::size_t requested)
      : Error(what), found_(found), requested_(requested) {}

  std::size_t found() const noexcept { return found_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t found_;
  std::size_t requested_;
};

}  // namespace dddp
