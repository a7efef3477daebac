#include "gfroots/linearized.hpp"

#include <vector>

#include "doctest.h"
#include "gfroots/random.hpp"
#include "oracles.hpp"

using namespace gfroots;

namespace {

LinearizedPoly random_lin(PolyRng& rng, const Field& f, std::size_t terms) {
  LinearizedPoly lin;
  lin.coeffs.resize(terms);
  for (Element& c : lin.coeffs) c = rng.any(f);
  return lin;
}

// sum_j L_j * y^(2^j) with powers by repeated multiplication.
std::uint32_t eval_oracle(const LinearizedPoly& lin, std::uint32_t y,
                          const Field& f) {
  std::uint32_t sum = 0;
  std::uint64_t e = 1;
  for (Element c : lin.coeffs) {
    sum ^= oracle::mul_mod(c.value, oracle::pow_mod(y, e, f.m(), f.spec().prim_poly),
                           f.m(), f.spec().prim_poly);
    e *= 2;
  }
  return sum;
}

}  // namespace

TEST_CASE("eval_direct") {
  const Field f(FieldSpec{3, 0b1011});
  const LinearizedPoly square{{Element{0}, Element{1}}};
  const LinearizedPoly identity{{Element{1}}};
  CHECK(eval_direct(square, f.antilog(3), f) == f.antilog(6));
  for (std::uint32_t y = 0; y < 8; ++y) {
    CHECK(eval_direct(identity, Element{y}, f) == Element{y});
  }
  PolyRng rng(1);
  for (int i = 0; i < 10; ++i) {
    CHECK(eval_direct(random_lin(rng, f, 4), Element{0}, f) == Element{0});
  }
}

TEST_CASE("eval_direct matches power-sum oracle") {
  PolyRng rng(2);
  for (unsigned m : {3U, 5U, 8U}) {
    const Field f(default_spec(m));
    for (int i = 0; i < 10; ++i) {
      const auto lin = random_lin(rng, f, 1 + rng.below(5));
      for (std::uint32_t y = 0; y < f.size(); ++y) {
        REQUIRE(eval_direct(lin, Element{y}, f).value == eval_oracle(lin, y, f));
      }
    }
  }
}

TEST_CASE("build_table") {
  const Field f(FieldSpec{3, 0b1011});
  const auto id = build_table(LinearizedPoly{{Element{1}}}, f);
  CHECK(id.vals == std::vector<Element>{f.antilog(0), f.antilog(1), f.antilog(2)});
  const auto sq = build_table(LinearizedPoly{{Element{0}, Element{1}}}, f);
  CHECK(sq.vals == std::vector<Element>{f.antilog(0), f.antilog(2), f.antilog(4)});
  const auto zero = build_table(LinearizedPoly{std::vector<Element>(4)}, f);
  CHECK(zero.vals == std::vector<Element>(3));
  CHECK_THROWS_AS(build_table(LinearizedPoly{{}}, f), Error);
}

TEST_CASE("build_table costs 4 mul + 3 add per entry for 4-term blocks") {
  for (unsigned m : {3U, 8U, 16U}) {
    const Field f(default_spec(m));
    PolyRng rng(m);
    CountingOps ops(f);
    const auto tbl = build_table(random_lin(rng, f, 4), ops);
    CHECK(tbl.vals.size() == m);
    CHECK(ops.counts() == OpCounts{3ULL * m, 4ULL * m, 0});
  }
}

TEST_CASE("eval_by_table") {
  const Field f(FieldSpec{3, 0b1011});
  const auto sq = build_table(LinearizedPoly{{Element{0}, Element{1}}}, f);
  CHECK(eval_by_table(sq, Element{0}) == Element{0});
  for (unsigned k = 0; k < 3; ++k) {
    CHECK(eval_by_table(sq, Element{1U << k}) == sq.vals[k]);
  }
  CHECK(eval_by_table(sq, f.antilog(3)) == Element{0b101});
  CHECK(eval_by_table(sq, f.antilog(3)) == f.antilog(6));
}

TEST_CASE("table evaluation equals direct evaluation, exhaustive m <= 8") {
  PolyRng rng(4);
  for (unsigned m = 2; m <= 8; ++m) {
    const Field f(default_spec(m));
    for (int i = 0; i < 50; ++i) {
      const auto lin = random_lin(rng, f, 1 + rng.below(6));
      const auto tbl = build_table(lin, f);
      for (unsigned k = 0; k < m; ++k) {
        REQUIRE(tbl.vals[k] == eval_direct(lin, f.antilog(k), f));
      }
      for (std::uint32_t y = 0; y < f.size(); ++y) {
        REQUIRE(eval_by_table(tbl, Element{y}) == eval_direct(lin, Element{y}, f));
      }
    }
  }
}

TEST_CASE("additivity") {
  PolyRng rng(6);
  for (unsigned m = 2; m <= 4; ++m) {
    const Field f(default_spec(m));
    for (int i = 0; i < 20; ++i) {
      const auto lin = random_lin(rng, f, 4);
      for (std::uint32_t a = 0; a < f.size(); ++a) {
        for (std::uint32_t b = 0; b < f.size(); ++b) {
          REQUIRE(eval_direct(lin, Field::add(Element{a}, Element{b}), f) ==
                  Field::add(eval_direct(lin, Element{a}, f),
                             eval_direct(lin, Element{b}, f)));
        }
      }
    }
  }
  const Field f(default_spec(8));
  const auto lin = random_lin(rng, f, 4);
  for (int i = 0; i < 10000; ++i) {
    const Element a = rng.any(f), b = rng.any(f);
    REQUIRE(eval_direct(lin, Field::add(a, b), f) ==
            Field::add(eval_direct(lin, a, f), eval_direct(lin, b, f)));
  }
}

TEST_CASE("affine_walk") {
  const Field f(FieldSpec{3, 0b1011});
  const auto seq = gray_sequence(3);

  SUBCASE("zero linear part is constant") {
    const AffinePoly a{LinearizedPoly{std::vector<Element>(4)}, Element{5}};
    const auto vals = affine_walk(a, seq, build_table(a.lin, f));
    CHECK(vals == std::vector<Element>(8, Element{5}));
  }
  SUBCASE("y^2 along the Gray order") {
    const AffinePoly a{LinearizedPoly{{Element{0}, Element{1}}}, Element{0}};
    const auto vals = affine_walk(a, seq, build_table(a.lin, f));
    const std::vector<Element> order{Element{0},  f.antilog(0), f.antilog(3),
                                     f.antilog(1), f.antilog(4), f.antilog(5),
                                     f.antilog(6), f.antilog(2)};
    REQUIRE(vals.size() == order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
      CHECK(vals[j] == eval_direct(a.lin, order[j], f));
    }
  }
  SUBCASE("pointwise against direct evaluation") {
    PolyRng rng(8);
    for (unsigned m : {3U, 6U, 8U}) {
      const Field g(default_spec(m));
      const auto gs = gray_sequence(m);
      for (int i = 0; i < 20; ++i) {
        const AffinePoly a{random_lin(rng, g, 4), rng.any(g)};
        const auto vals = affine_walk(a, gs, build_table(a.lin, g));
        REQUIRE(vals.front() == a.beta);
        for (const GrayStep& s : gs) {
          REQUIRE(vals[s.index] == Field::add(eval_direct(a.lin, s.x, g), a.beta));
        }
      }
    }
  }
}
