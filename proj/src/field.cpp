#include "gfroots/field.hpp"

#include <array>
#include <string>

#include "gfroots/error.hpp"

namespace gfroots {

namespace {

// One primitive polynomial per degree; index is m. The m = 8 entry is the
// x^8+x^4+x^3+x^2+1 polynomial used by most Reed-Solomon codecs.
constexpr std::array<std::uint32_t, kMaxDegree + 1> kDefaultPrimPoly = {
    0,       0,       0x7,    0xB,    0x13,   0x25,   0x43,   0x89,   0x11D,
    0x211,   0x409,   0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

void validate(const FieldSpec& spec) {
  if (spec.m < kMinDegree || spec.m > kMaxDegree) {
    throw Error(ErrorKind::BadSpec,
                "field degree m=" + std::to_string(spec.m) +
                    " out of range [2, 16]");
  }
  const std::uint32_t top = std::uint32_t{1} << spec.m;
  if ((spec.prim_poly & top) == 0 || (spec.prim_poly >> (spec.m + 1)) != 0) {
    throw Error(ErrorKind::BadSpec,
                "polynomial mask must have degree exactly m=" +
                    std::to_string(spec.m));
  }
  if ((spec.prim_poly & 1U) == 0) {
    throw Error(ErrorKind::BadSpec,
                "polynomial mask has zero constant term");
  }
}

}  // namespace

std::uint32_t default_prim_poly(unsigned m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw Error(ErrorKind::BadSpec,
                "no default polynomial for m=" + std::to_string(m));
  }
  return kDefaultPrimPoly[m];
}

FieldSpec default_spec(unsigned m) { return FieldSpec{m, default_prim_poly(m)}; }

Field::Field(FieldSpec spec) : spec_(spec) {
  validate(spec_);
  const std::uint32_t n = order();
  const std::uint32_t top = size();
  reduce_magic_ = ~std::uint64_t{0} / n + 1;

  antilog_.assign(2 * static_cast<std::size_t>(n), Element{});
  log_.assign(top, 0);

  // Walk the orbit of α, multiplying by α and reducing modulo prim_poly.
  std::uint32_t v = 1;
  std::vector<bool> seen(top, false);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (seen[v]) {
      throw Error(ErrorKind::NotPrimitive,
                  "orbit of alpha closes after " + std::to_string(k) +
                      " of " + std::to_string(n) + " steps");
    }
    seen[v] = true;
    antilog_[k] = Element{v};
    antilog_[k + n] = Element{v};
    log_[v] = k;
    v <<= 1;
    if (v & top) v ^= spec_.prim_poly;
  }
  if (v != 1) {
    // Unreachable for a mask with nonzero constant term: n distinct
    // nonzero values force the cycle to close at 1.
    throw Error(ErrorKind::NotPrimitive, "orbit of alpha does not close at 1");
  }
}

Element Field::element(std::uint32_t value) const {
  if (value >= size()) {
    throw Error(ErrorKind::BadSpec, "value " + std::to_string(value) +
                                        " does not fit in GF(2^" +
                                        std::to_string(spec_.m) + ")");
  }
  return Element{value};
}

void Field::throw_log_of_zero() {
  throw Error(ErrorKind::DivisionByZero, "log of zero");
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroToZero, "0^0 is undefined");
    return Element{1};
  }
  if (a.is_zero()) return Element{};
  return antilog(std::uint64_t{reduce(e)} * log_[a.value]);
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return antilog(order() - log_[a.value]);
}

}  // namespace gfroots
