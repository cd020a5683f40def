#pragma once

#include <stdexcept>
#include <string>

namespace reco {

// Error taxonomy shared by all modules. The CLI maps kinds onto process
// exit codes: config/param -> 2, data/io -> 3, numeric -> 4, invariant -> 5.
enum class ErrorKind {
  config,     // bad configuration file, key, or value
  param,      // invalid argument to an operation
  contract,   // caller violated an interface contract (e.g. wrong branch tag)
  state,      // operation invalid in the current state (e.g. empty bank)
  data,       // malformed or missing dataset / file contents
  io,         // filesystem failure
  numeric,    // non-finite value where finiteness is required
  invariant,  // internal invariant violated (smoke-test aborts on these)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) raise(kind, msg);
}

}  // namespace reco
