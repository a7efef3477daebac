#include "gfroots/roots.hpp"

#include <string>

namespace gfroots {

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::Chien: return "chien";
    case Method::Fast: return "fast";
  }
  return "unknown";
}

void require_nonconstant(const Poly& p) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput,
                "zero polynomial: every element is a root");
  }
  if (p.degree() == 0) {
    throw Error(ErrorKind::DegenerateInput, "constant polynomial");
  }
}

RootSet chien_search(const Poly& p, const Field& field) {
  PlainOps ops(field);
  RootSet roots;
  chien_walk(p, ops, [&](Element x, Element v) {
    if (v.is_zero()) roots.insert(x);
  });
  if (p.coeff(0).is_zero()) roots.insert(Element{});
  return roots;
}

std::vector<std::pair<Element, Element>> fast_eval_all(const Poly& p,
                                                       const Field& field) {
  PlainOps ops(field);
  std::vector<std::pair<Element, Element>> out;
  out.reserve(field.size());
  fast_walk(p, ops, [&](Element x, Element v) { out.emplace_back(x, v); });
  return out;
}

RootSet fast_find_roots(const Poly& p, const Field& field) {
  PlainOps ops(field);
  RootSet roots;
  fast_walk(p, ops, [&](Element x, Element v) {
    if (v.is_zero()) roots.insert(x);
  });
  return roots;
}

RootSet brute_force_roots(const Poly& p, const Field& field) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput,
                "zero polynomial: every element is a root");
  }
  RootSet roots;
  for (std::uint32_t v = 0; v < field.size(); ++v) {
    if (eval_horner(p, Element{v}, field).is_zero()) roots.insert(Element{v});
  }
  return roots;
}

RootSet find_roots(Method method, const Poly& p, const Field& field) {
  return method == Method::Chien ? chien_search(p, field)
                                 : fast_find_roots(p, field);
}

OpCounts count_ops(Method method, const Poly& p, const Field& field) {
  CountingOps ops(field);
  auto sink = [](Element, Element) {};
  if (method == Method::Chien) {
    chien_walk(p, ops, sink);
  } else {
    fast_walk(p, ops, sink);
  }
  return ops.counts();
}

OpCounts predict_ops(Method method, std::size_t t, unsigned m) {
  if (t < 1) throw Error(ErrorKind::BadSpec, "degree must be at least 1");
  if (m < kMinDegree || m > kMaxDegree) {
    throw Error(ErrorKind::BadSpec,
                "field degree m=" + std::to_string(m) + " out of range");
  }
  const std::uint64_t points = (std::uint64_t{1} << m) - 1;
  if (method == Method::Chien) {
    return OpCounts{t * points, t * points, 0};
  }
  const std::uint64_t n = block_count(t);
  return OpCounts{3 * m * n + 2 * n * points, 4 * m * n + n * points,
                  2 * points};
}

}  // namespace gfroots
