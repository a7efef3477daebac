#pragma once

#include <cstddef>
#include <vector>

#include "gfroots/field.hpp"
#include "gfroots/linearized.hpp"
#include "gfroots/poly.hpp"

namespace gfroots {

inline constexpr std::size_t kBlockStride = 5;
inline constexpr std::size_t kBlockTerms = 4;

/// x^(5i) * (constant + L(x)), where L has the four terms x, x^2, x^4, x^8
/// carrying f_{5i+1}, f_{5i+2}, f_{5i+4}, f_{5i+8}.
struct Block {
  Element constant;
  LinearizedPoly lin{std::vector<Element>(kBlockTerms)};

  friend bool operator==(const Block&, const Block&) = default;
};

/// F(x) = cubic * x^3 + sum_i x^(5i) * (blocks[i].constant + blocks[i].lin(x)).
struct Decomposition {
  Element cubic;
  std::vector<Block> blocks;
  std::size_t source_degree = 0;
};

/// max(1, ceil((t - 4) / 5) + 1).
std::size_t block_count(std::size_t t) noexcept;

/// Throws Error{DegenerateInput} for the zero polynomial.
Decomposition decompose(const Poly& p);

Poly recompose(const Decomposition& d);

}  // namespace gfroots
