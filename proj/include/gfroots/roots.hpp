#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gfroots/decompose.hpp"
#include "gfroots/error.hpp"
#include "gfroots/field.hpp"
#include "gfroots/graycode.hpp"
#include "gfroots/linearized.hpp"
#include "gfroots/ops.hpp"
#include "gfroots/poly.hpp"

namespace gfroots {

/// Distinct roots, ordered by element value.
using RootSet = std::set<Element>;

enum class Method { Chien, Fast };

const char* to_string(Method method) noexcept;

/// Throws Error{DegenerateInput} unless degree(p) >= 1.
void require_nonconstant(const Poly& p);

/// Chien search over x = α^1, ..., α^(2^m - 1) = α^0. Term accumulators
/// q_j = f_j x^j are advanced by q_j <- q_j * α^j, so each point costs t
/// multiplications and t additions. Visits (x, F(x)); x = 0 is not visited.
template <class Ops, class Visit>
void chien_walk(const Poly& p, Ops& ops, Visit&& visit) {
  require_nonconstant(p);
  const Field& field = ops.field();
  const auto f = p.coeffs();
  const std::size_t t = p.degree();

  std::vector<Element> q(f.begin() + 1, f.end());
  std::vector<Element> step(t);
  for (std::size_t j = 0; j < t; ++j) step[j] = field.antilog(j + 1);

  const std::uint32_t n = field.order();
  for (std::uint32_t i = 1; i <= n; ++i) {
    Element sum = f[0];
    for (std::size_t j = 0; j < t; ++j) {
      q[j] = ops.mul(q[j], step[j]);
      sum = ops.add(sum, q[j]);
    }
    visit(field.antilog(i), sum);
  }
}

/// Gray-code evaluation of F at all 2^m points using the block
/// decomposition. Precomputation builds one basis table per block
/// (m * N * (4 mul + 3 add)). Each nonzero point then costs N accumulator
/// additions, two exponentiations (x^3, x^5), and a Horner combination in
/// x^5 of N multiplications and N additions including the f_3 x^3 term.
/// Visits (x_j, F(x_j)) in Gray order, starting with (0, f_0).
template <class Ops, class Visit>
void fast_walk(const Poly& p, Ops& ops, Visit&& visit) {
  require_nonconstant(p);
  const Field& field = ops.field();
  const Decomposition d = decompose(p);
  const std::size_t nblocks = d.blocks.size();
  const unsigned m = field.m();

  // tables[k * nblocks + i] = L_i(α^k), laid out so one step touches a
  // contiguous row.
  std::vector<Element> tables(static_cast<std::size_t>(m) * nblocks);
  std::vector<Element> acc(nblocks);
  for (std::size_t i = 0; i < nblocks; ++i) {
    const LTable tbl = build_table(d.blocks[i].lin, ops);
    for (unsigned k = 0; k < m; ++k) tables[k * nblocks + i] = tbl.vals[k];
    acc[i] = d.blocks[i].constant;
  }

  visit(Element{}, acc[0]);

  const std::uint32_t size = field.size();
  for (std::uint32_t j = 1; j < size; ++j) {
    const Element x = gray_point(j);
    const Element* row = &tables[gray_delta(j) * nblocks];
    for (std::size_t i = 0; i < nblocks; ++i) acc[i] = ops.add(acc[i], row[i]);

    const LogElement x3 = ops.exp(x, 3);
    const LogElement x5 = ops.exp(x, 5);
    Element h = acc[nblocks - 1];
    for (std::size_t i = nblocks - 1; i-- > 0;) {
      h = ops.add(ops.mul(h, x5), acc[i]);
    }
    visit(x, ops.add(ops.mul(d.cubic, x3), h));
  }
}

/// Roots via Chien search; 0 is reported iff f_0 = 0.
/// Throws Error{DegenerateInput} for zero or constant polynomials.
RootSet chien_search(const Poly& p, const Field& field);

/// (x_j, F(x_j)) for all 2^m points in Gray order.
std::vector<std::pair<Element, Element>> fast_eval_all(const Poly& p,
                                                       const Field& field);

RootSet fast_find_roots(const Poly& p, const Field& field);

/// Horner at every field element. Independent of both walks above.
/// Throws Error{DegenerateInput} for the zero polynomial; a nonzero
/// constant has no roots.
RootSet brute_force_roots(const Poly& p, const Field& field);

RootSet find_roots(Method method, const Poly& p, const Field& field);

/// Runs the method with instrumented arithmetic and returns the tallies.
OpCounts count_ops(Method method, const Poly& p, const Field& field);

/// Closed-form operation counts for degree t over GF(2^m).
/// Chien: adds = muls = t(2^m - 1). Fast, with N = block_count(t):
/// adds = 3mN + 2N(2^m - 1), muls = 4mN + N(2^m - 1), exps = 2(2^m - 1).
/// Throws Error{BadSpec} for t < 1 or m outside [2, 16].
OpCounts predict_ops(Method method, std::size_t t, unsigned m);

}  // namespace gfroots
