#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gfroots/error.hpp"
#include "gfroots/field.hpp"
#include "gfroots/graycode.hpp"
#include "gfroots/ops.hpp"

namespace gfroots {

/// L(y) = sum_j coeffs[j] * y^(2^j). Acts GF(2)-linearly on the field.
struct LinearizedPoly {
  std::vector<Element> coeffs{Element{}};

  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

/// Values of L on the standard basis: vals[k] = L(α^k), k < m.
struct LTable {
  std::vector<Element> vals;
};

/// A(y) = L(y) + beta.
struct AffinePoly {
  LinearizedPoly lin;
  Element beta;
};

/// Evaluates term by term, obtaining y^(2^j) by repeated squaring.
Element eval_direct(const LinearizedPoly& lin, Element y, const Field& field);

/// Table entry k costs size(L) multiplications and size(L) - 1 additions;
/// the powers (α^k)^(2^j) come from exponent doubling, not multiplication.
template <class Ops>
  requires requires(Ops& o) { o.field(); }
LTable build_table(const LinearizedPoly& lin, Ops& ops) {
  if (lin.coeffs.empty()) {
    throw Error(ErrorKind::BadSpec, "linearized polynomial has no terms");
  }
  const Field& field = ops.field();
  const auto antilog = field.antilog_table();
  const std::uint32_t n = field.order();
  LTable tbl;
  tbl.vals.reserve(field.m());
  for (unsigned k = 0; k < field.m(); ++k) {
    std::uint32_t e = k;
    Element v = ops.mul(lin.coeffs[0], antilog[e]);
    for (std::size_t j = 1; j < lin.coeffs.size(); ++j) {
      e *= 2;
      if (e >= n) e -= n;
      v = ops.add(v, ops.mul(lin.coeffs[j], antilog[e]));
    }
    tbl.vals.push_back(v);
  }
  return tbl;
}

LTable build_table(const LinearizedPoly& lin, const Field& field);

/// XOR of vals[k] over the set bits k of y.
Element eval_by_table(const LTable& tbl, Element y);

/// A(x_j) along a Gray walk: A(x_0) = beta, then one addition per step.
std::vector<Element> affine_walk(const AffinePoly& a, const GraySequence& steps,
                                 const LTable& tbl);

}  // namespace gfroots
