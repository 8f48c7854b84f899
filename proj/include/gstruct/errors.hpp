#pragma once

#include <stdexcept>
#include <string>

namespace gstruct {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, invalid parameters, bad encodings.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A mathematical precondition failed (degenerate metric, nonpositive
/// volume, singular frame, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace gstruct
