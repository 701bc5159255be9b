#pragma once

#include <stdexcept>
#include <string>

namespace geocp {

// Data or validation failure: malformed files, violated invariants,
// inconsistent inputs. Mapped to exit code 1 by the CLI.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration or command usage. Mapped to exit code 2 by the CLI.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geocp
