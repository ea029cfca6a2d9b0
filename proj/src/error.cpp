#include "sepq/error.hpp"

namespace sepq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooFewNonzero: return "TooFewNonzero";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace sepq
