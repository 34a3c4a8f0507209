#pragma once

#include <stdexcept>
#include <string>

namespace dessl {

// Error taxonomy used across the library:
//   ConfigError    - invalid static configuration (specs, shapes of declared things, file schemas)
//   UsageError     - a call violating an operation's runtime contract (empty batch, missing grads)
//   NumericError   - non-finite values where finite ones are required
//   ParseError     - malformed external input (CSV rows, config documents)
//   DegenerateSurrogateError - zero surrogate variance, weight tuning undefined
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DegenerateSurrogateError : Error {
  using Error::Error;
};

}  // namespace dessl
