#include "gfroots/graycode.hpp"

#include <string>

#include "gfroots/error.hpp"

namespace gfroots {

GraySequence::GraySequence(unsigned m) : m_(m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw Error(ErrorKind::BadSpec,
                "gray sequence length m=" + std::to_string(m) +
                    " out of range [2, 16]");
  }
}

GraySequence gray_sequence(unsigned m) { return GraySequence(m); }

}  // namespace gfroots
