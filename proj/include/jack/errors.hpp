#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jack {

enum class ErrorKind { Precondition, Internal };

// Every failure raised by the library carries a short symbolic name
// (for example "NotColumnStrict") next to the human readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message,
        ErrorKind kind = ErrorKind::Precondition)
      : std::runtime_error(name + ": " + message),
        name_(std::move(name)),
        kind_(kind) {}

  const std::string& name() const noexcept { return name_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string name_;
  ErrorKind kind_;
};

[[noreturn]] inline void raise(const std::string& name, const std::string& message) {
  throw Error(name, message, ErrorKind::Precondition);
}

[[noreturn]] inline void raise_internal(const std::string& message) {
  throw Error("InternalInvariant", message, ErrorKind::Internal);
}

}  // namespace jack
