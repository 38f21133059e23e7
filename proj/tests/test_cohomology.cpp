#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lenstc/cohomology.hpp"
#include "oracles.hpp"

using namespace lenstc;

namespace {

RingElement x_elem(LensParams p) { return RingElement::monomial(p, kX); }
RingElement y_elem(LensParams p) { return RingElement::monomial(p, kY); }

// Random sparse homogeneous tensor element of a random degree.
TensorElement random_homogeneous(LensParams p, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> deg_dist(0, 2 * p.dim());
  std::uint32_t deg = deg_dist(rng);
  TensorElement e(p);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p.m - 1);
  for (std::uint32_t r1 = 0; r1 <= p.n; ++r1)
    for (std::uint8_t s1 = 0; s1 <= 1; ++s1)
      for (std::uint32_t r2 = 0; r2 <= p.n; ++r2)
        for (std::uint8_t s2 = 0; s2 <= 1; ++s2) {
          TensorMonomial mono{{s1, r1}, {s2, r2}};
          if (degree(mono) != deg) continue;
          if (rng() % 3 == 0) e.add_term(mono, coeff(rng));
        }
  return e;
}

TensorElement random_element(LensParams p, std::mt19937& rng) {
  TensorElement e = random_homogeneous(p, rng);
  if (rng() % 2) e = e + random_homogeneous(p, rng);
  return e;
}

}  // namespace

TEST_CASE("ring relations x^2 = a*y and y^{n+1} = 0") {
  auto p2 = LensParams::make(2, 1);
  CHECK(ring_multiply(x_elem(p2), x_elem(p2)) == y_elem(p2));

  auto p3 = LensParams::make(3, 1);
  CHECK(ring_multiply(x_elem(p3), x_elem(p3)).is_zero());

  for (std::uint32_t m : {2, 3, 6, 9}) {
    auto p = LensParams::make(m, 3);
    RingElement yn = RingElement::monomial(p, RingMonomial{0, p.n});
    CHECK(ring_multiply(yn, y_elem(p)).is_zero());
  }
}

TEST_CASE("mismatched parameters are rejected") {
  auto p = LensParams::make(3, 2);
  auto q = LensParams::make(5, 2);
  CHECK_THROWS_AS(ring_multiply(x_elem(p), x_elem(q)), std::invalid_argument);
  CHECK_THROWS_AS(
      tensor_multiply(TensorElement::unit(p), TensorElement::unit(q)),
      std::invalid_argument);
}

TEST_CASE("Koszul sign on (1(x)x)(x(x)1)") {
  auto p = LensParams::make(5, 1);
  auto one_x = TensorElement::monomial(p, {kUnitMonomial, kX});
  auto x_one = TensorElement::monomial(p, {kX, kUnitMonomial});

  auto prod = tensor_multiply(one_x, x_one);
  CHECK(prod.coefficient({kX, kX}) == p.m - 1);

  auto prod2 = tensor_multiply(x_one, one_x);
  CHECK(prod2.coefficient({kX, kX}) == 1);
}

TEST_CASE("bar(x)^2 vanishes for odd m") {
  auto p = LensParams::make(3, 2);
  auto xb = bar(x_elem(p));
  CHECK(power(xb, 2).is_zero());
}

TEST_CASE("bar basics") {
  auto p = LensParams::make(7, 2);
  auto yb = bar(y_elem(p));
  CHECK(yb.coefficient({kUnitMonomial, kY}) == 1);
  CHECK(yb.coefficient({kY, kUnitMonomial}) == p.m - 1);

  CHECK_THROWS_AS(bar(RingElement::unit(p)), std::invalid_argument);
  CHECK_THROWS_AS(bar(x_elem(p) + y_elem(p)), std::invalid_argument);
}

TEST_CASE("bar(x)^2 = a(1(x)y + y(x)1) on an m grid") {
  for (std::uint32_t m = 2; m <= 16; ++m) {
    auto p = LensParams::make(m, 2);
    auto sq = power(bar(x_elem(p)), 2);
    TensorElement expected(p);
    expected.add_term({kUnitMonomial, kY}, p.a);
    expected.add_term({kY, kUnitMonomial}, p.a);
    CHECK(sq == expected);
  }
}

TEST_CASE("diagonal restriction kills bar and acts as identity on 1(x)u") {
  auto p = LensParams::make(6, 3);
  for (std::uint32_t r = 0; r <= p.n; ++r)
    for (std::uint8_t s = 0; s <= 1; ++s) {
      RingMonomial mono{s, r};
      if (mono.degree() == 0) continue;
      CHECK(diagonal_restriction(bar(RingElement::monomial(p, mono))).is_zero());
    }
  CHECK(diagonal_restriction(TensorElement::monomial(p, {kUnitMonomial, kY})) ==
        y_elem(p));
  auto xx = TensorElement::monomial(p, {kX, kX});
  CHECK(diagonal_restriction(xx) ==
        RingElement::monomial(p, kY, p.a));
}

TEST_CASE("power of bar(y) carries signed binomial coefficients") {
  for (std::uint32_t m = 2; m <= 12; ++m) {
    for (std::uint32_t n = 1; n <= 5; ++n) {
      auto p = LensParams::make(m, n);
      auto yb = bar(y_elem(p));
      for (std::uint32_t k = 0; k <= n; ++k)
        for (std::uint32_t l = 0; l + k <= 2 * n && l <= n; ++l) {
          auto pw = power(yb, k + l);
          std::uint32_t expected = oracle::binomial_mod(k + l, k, m);
          if (k % 2) expected = (m - expected) % m;
          CHECK(pw.coefficient({RingMonomial{0, k}, RingMonomial{0, l}}) ==
                expected);
        }
    }
  }
}

TEST_CASE("power(u, 0) is the unit") {
  auto p = LensParams::make(4, 2);
  std::mt19937 rng(7);
  CHECK(power(random_element(p, rng), 0) == TensorElement::unit(p));
}

TEST_CASE("full binomial theorem for bar(y)") {
  for (std::uint32_t m : {2, 3, 5, 8}) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      auto p = LensParams::make(m, n);
      for (std::uint32_t t = 0; t <= 2 * n + 1; ++t) {
        TensorElement expected(p);
        for (std::uint32_t k = 0; k <= t; ++k) {
          if (k > n || t - k > n) continue;
          std::uint32_t c = oracle::binomial_mod(t, k, m);
          if (k % 2) c = (m - c) % m;
          expected.add_term({RingMonomial{0, k}, RingMonomial{0, t - k}}, c);
        }
        CHECK(power(bar(y_elem(p)), t) == expected);
      }
    }
  }
}

TEST_CASE("randomized algebra axioms over a parameter grid") {
  std::mt19937 rng(20240817);
  for (std::uint32_t m = 2; m <= 8; ++m) {
    for (std::uint32_t n = 0; n <= 4; ++n) {
      auto p = LensParams::make(m, n);
      for (int iter = 0; iter < 60; ++iter) {
        auto u = random_homogeneous(p, rng);
        auto v = random_homogeneous(p, rng);
        auto w = random_element(p, rng);

        // Graded commutativity.
        auto uv = tensor_multiply(u, v);
        auto vu = tensor_multiply(v, u);
        auto du = u.homogeneous_degree();
        auto dv = v.homogeneous_degree();
        if (du && dv && (*du * *dv) % 2 != 0) vu = -vu;
        CHECK(uv == vu);

        // Associativity.
        CHECK(tensor_multiply(tensor_multiply(u, v), w) ==
              tensor_multiply(u, tensor_multiply(v, w)));

        // Diagonal restriction is a ring map.
        CHECK(diagonal_restriction(uv) ==
              ring_multiply(diagonal_restriction(u), diagonal_restriction(v)));
      }
    }
  }
}

TEST_CASE("single-factor graded commutativity") {
  std::mt19937 rng(99);
  for (std::uint32_t m : {2, 5, 9}) {
    auto p = LensParams::make(m, 3);
    std::uniform_int_distribution<std::uint32_t> rdist(0, p.n),
        cdist(1, p.m - 1);
    for (int iter = 0; iter < 200; ++iter) {
      auto u = RingElement::monomial(
          p, RingMonomial{static_cast<std::uint8_t>(rng() % 2), rdist(rng)},
          cdist(rng));
      auto v = RingElement::monomial(
          p, RingMonomial{static_cast<std::uint8_t>(rng() % 2), rdist(rng)},
          cdist(rng));
      auto uv = ring_multiply(u, v);
      auto vu = ring_multiply(v, u);
      auto du = *u.homogeneous_degree();
      auto dv = *v.homogeneous_degree();
      if ((du * dv) % 2 != 0) vu = -vu;
      CHECK(uv == vu);
    }
  }
}
