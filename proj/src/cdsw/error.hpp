#pragma once

#include <stdexcept>
#include <string>

namespace cdsw {

// All library failures carry a stable machine-readable code next to the
// human-readable message. Tests match on `code`, never on message text.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace cdsw
