#include "gfroots/error.hpp"

namespace gfroots {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroToZero: return "ZeroToZero";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace gfroots
