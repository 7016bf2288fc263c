#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smooth {

// Base of every error raised by the library. Precondition violations on
// plain arguments (bad letters, wrong alphabet class) use
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size limit (word length, generation, horizon) was exceeded.
class ResourceCapExceeded : public Error {
 public:
  ResourceCapExceeded(const std::string& what, std::size_t requested,
                      std::size_t cap)
      : Error(what + ": requested " + std::to_string(requested) +
              " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

// Raised by constructions that verify their own output. Firing means a bug.
class InternalConstructionError : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class NotPrimitive : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace smooth
