#pragma once

#include <stdexcept>
#include <string>

namespace ryser {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content or argument.
class InputError : public Error {
 public:
  using Error::Error;
};

// An algorithm was called on an input outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact search would exceed a configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A constructive cover failed to cover a vertex. Only possible when the
// input breaks the hypothesis the construction relies on (transitivity,
// the color-count threshold, ...). The message carries the diagnostic.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// Something that is provably impossible happened.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ryser
