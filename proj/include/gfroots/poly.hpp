#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gfroots/field.hpp"

namespace gfroots {

/// Dense polynomial over GF(2^m), coefficients ascending (f_0 first).
/// Always normalized: the leading coefficient is nonzero, and the zero
/// polynomial is the single coefficient [0].
class Poly {
 public:
  /// The zero polynomial.
  Poly() : coeffs_{Element{}} {}
  explicit Poly(std::vector<Element> coeffs);

  std::span<const Element> coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0].is_zero();
  }
  /// f_j, or 0 past the degree.
  Element coeff(std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Element{};
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Element> coeffs_;
};

/// Strips trailing zero coefficients; an empty or all-zero input yields [0].
std::vector<Element> normalize(std::vector<Element> coeffs);

/// Horner's rule: t multiplications and t additions.
Element eval_horner(const Poly& p, Element x, const Field& field);

/// Monic product of (x - r) over the roots, repeats included.
Poly poly_from_roots(std::span<const Element> roots, const Field& field);

/// Product of two polynomials (schoolbook).
Poly multiply(const Poly& a, const Poly& b, const Field& field);

}  // namespace gfroots
