#include "gfroots/decompose.hpp"

#include "gfroots/error.hpp"

namespace gfroots {

namespace {

constexpr std::size_t kCubicExponent = 3;
// Exponent offset within a block for linearized slot j, i.e. 2^j.
constexpr std::size_t slot_offset(std::size_t j) noexcept {
  return std::size_t{1} << j;
}

}  // namespace

std::size_t block_count(std::size_t t) noexcept {
  if (t <= 4) return 1;
  return (t - 4 + kBlockStride - 1) / kBlockStride + 1;
}

Decomposition decompose(const Poly& p) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput,
                "cannot decompose the zero polynomial");
  }
  Decomposition d;
  d.source_degree = p.degree();
  d.cubic = p.coeff(kCubicExponent);
  d.blocks.resize(block_count(p.degree()));
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    Block& b = d.blocks[i];
    const std::size_t base = kBlockStride * i;
    b.constant = p.coeff(base);
    for (std::size_t j = 0; j < kBlockTerms; ++j) {
      b.lin.coeffs[j] = p.coeff(base + slot_offset(j));
    }
  }
  return d;
}

Poly recompose(const Decomposition& d) {
  std::size_t top = kCubicExponent;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const std::size_t n = d.blocks[i].lin.coeffs.size();
    const std::size_t hi = kBlockStride * i + (n > 0 ? slot_offset(n - 1) : 0);
    if (hi > top) top = hi;
  }
  std::vector<Element> c(top + 1);
  c[kCubicExponent] = Field::add(c[kCubicExponent], d.cubic);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    const std::size_t base = kBlockStride * i;
    c[base] = Field::add(c[base], b.constant);
    for (std::size_t j = 0; j < b.lin.coeffs.size(); ++j) {
      c[base + slot_offset(j)] =
          Field::add(c[base + slot_offset(j)], b.lin.coeffs[j]);
    }
  }
  return Poly(std::move(c));
}

}  // namespace gfroots
