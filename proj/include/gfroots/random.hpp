#pragma once

#include <cstdint>
#include <random>

#include "gfroots/field.hpp"
#include "gfroots/poly.hpp"

namespace gfroots {

/// Seeded source of field elements and polynomials. Uses mt19937_64 with a
/// plain modulo reduction so sequences are identical on every platform.
class PolyRng {
 public:
  explicit PolyRng(std::uint64_t seed) : engine_(seed) {}

  Element any(const Field& field) {
    return Element{static_cast<std::uint32_t>(engine_() % field.size())};
  }
  Element nonzero(const Field& field) {
    return Element{static_cast<std::uint32_t>(1 + engine_() % field.order())};
  }
  /// Uniform coefficients with a nonzero leading term, so degree is exact.
  Poly poly(const Field& field, std::size_t degree) {
    std::vector<Element> c(degree + 1);
    for (std::size_t j = 0; j < degree; ++j) c[j] = any(field);
    c[degree] = nonzero(field);
    return Poly(std::move(c));
  }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gfroots
