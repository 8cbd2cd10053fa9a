#pragma once

#include <stdexcept>
#include <string>

namespace spine {

enum class ErrorCode {
  InvalidSpec,
  Disconnected,
  AlphabetTooLarge,
  TableNotClosed,
  TooLarge,
  UnknownBuiltin,
  BadDiskIndex,
};

const char* to_string(ErrorCode code);

class SpineError : public std::runtime_error {
 public:
  SpineError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spine
