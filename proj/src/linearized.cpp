#include "gfroots/linearized.hpp"

namespace gfroots {

Element eval_direct(const LinearizedPoly& lin, Element y, const Field& field) {
  Element sum;
  Element power = y;
  for (std::size_t j = 0; j < lin.coeffs.size(); ++j) {
    if (j > 0) power = field.mul(power, power);
    sum = Field::add(sum, field.mul(lin.coeffs[j], power));
  }
  return sum;
}

LTable build_table(const LinearizedPoly& lin, const Field& field) {
  PlainOps ops(field);
  return build_table(lin, ops);
}

Element eval_by_table(const LTable& tbl, Element y) {
  Element sum;
  for (std::size_t k = 0; k < tbl.vals.size(); ++k) {
    if (y.bit(static_cast<unsigned>(k))) sum = Field::add(sum, tbl.vals[k]);
  }
  return sum;
}

std::vector<Element> affine_walk(const AffinePoly& a, const GraySequence& steps,
                                 const LTable& tbl) {
  std::vector<Element> out;
  out.reserve(steps.size());
  Element value = a.beta;
  for (const GrayStep& s : steps) {
    if (s.delta_pos) value = Field::add(value, tbl.vals[*s.delta_pos]);
    out.push_back(value);
  }
  return out;
}

}  // namespace gfroots
