#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace betapath {

// Domain error carrying a stable machine-readable name. The CLI maps the
// name into its error object; tests match on it.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
  throw Error(std::move(name), message);
}

}  // namespace betapath
