#include "spine/error.hpp"

namespace spine {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::TableNotClosed: return "TableNotClosed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::BadDiskIndex: return "BadDiskIndex";
  }
  return "Unknown";
}

}  // namespace spine
