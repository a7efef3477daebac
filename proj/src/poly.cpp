#include "gfroots/poly.hpp"

#include <algorithm>

namespace gfroots {

std::vector<Element> normalize(std::vector<Element> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(Element{});
  return coeffs;
}

Poly::Poly(std::vector<Element> coeffs) : coeffs_(normalize(std::move(coeffs))) {}

Element eval_horner(const Poly& p, Element x, const Field& field) {
  const auto c = p.coeffs();
  Element acc = c.back();
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    acc = Field::add(field.mul(acc, x), c[j]);
  }
  return acc;
}

Poly poly_from_roots(std::span<const Element> roots, const Field& field) {
  std::vector<Element> c{Element{1}};
  c.reserve(roots.size() + 1);
  for (Element r : roots) {
    // (c0 + c1 x + ...)(x + r): shift up, then add r * c.
    c.push_back(Element{});
    for (std::size_t j = c.size() - 1; j > 0; --j) {
      c[j] = Field::add(c[j - 1], field.mul(c[j], r));
    }
    c[0] = field.mul(c[0], r);
  }
  return Poly(std::move(c));
}

Poly multiply(const Poly& a, const Poly& b, const Field& field) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Element> c(a.degree() + b.degree() + 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) {
      c[i + j] = Field::add(c[i + j], field.mul(ac[i], bc[j]));
    }
  }
  return Poly(std::move(c));
}

}  // namespace gfroots
