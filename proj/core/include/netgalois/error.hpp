#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netgalois {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file, bad index, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure grew past its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// The lattice is not graded, so no dimension function exists.
class NotModularError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant broken (label miss, convention mismatch). Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace netgalois
