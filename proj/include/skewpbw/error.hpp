#pragma once

#include <stdexcept>
#include <string>

namespace skewpbw {

/// Domain error carrying a stable kind tag (e.g. "NotInjective",
/// "QMatrixInvalid") next to a human readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)), message_(message) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string kind_;
  std::string message_;
};

}  // namespace skewpbw
