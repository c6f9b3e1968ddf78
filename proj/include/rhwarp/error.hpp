#pragma once

#include <stdexcept>
#include <string>

namespace rhwarp {

enum class ErrorKind {
  behind_camera,     // point with x2 <= 0 handed to a projection
  degenerate,        // ill-posed input, e.g. the antipode -e2
  non_injective,     // PY radius on a multiple of pi
  out_of_domain,     // outside the hemisphere / valid parameter range
  precondition,      // violated operation precondition
  invalid_argument,  // malformed value (bad sizes, bad file contents)
  io,                // file could not be read or written
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace rhwarp
