/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tbelyi/factor.hpp"

using namespace tbelyi;

namespace {

RationalPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

bool root_of(const RationalPolynomial& p, const FieldElement& r) {
  return to_field(p).eval(r).is_zero();
}

}  // namespace

TEST_CASE("quadratic with imaginary roots") {
  // x^2 + 2x + 21 has roots -1 +- 2 sqrt(-5)
  Factorization f = factor_deg_le2(poly({21, 2, 1}));
  auto roots = f.roots();
  REQUIRE(roots.size() == 2);
  auto expected_a = FieldElement::quadratic(Rational(-1), Rational(2), Integer(-5));
  auto expected_b = FieldElement::quadratic(Rational(-1), Rational(-2), Integer(-5));
  CHECK(((roots[0].first == expected_a && roots[1].first == expected_b) ||
         (roots[0].first == expected_b && roots[1].first == expected_a)));
  CHECK(roots[0].second == 1);
}

TEST_CASE("repeated root") {
  Factorization f = factor_deg_le2(poly({0, 0, 0, 1}));
  auto roots = f.roots();
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].first == FieldElement(0));
  CHECK(roots[0].second == 3);
}

TEST_CASE("irreducible cubic stays unresolved") {
  Factorization f = factor_deg_le2(poly({-2, 0, 0, 1}));
  CHECK(f.roots().empty());
  REQUIRE(f.unresolved().size() == 1);
  CHECK(f.unresolved()[0].first.degree() == 3);
}

TEST_CASE("zero polynomial throws") {
  CHECK_THROWS_AS(factor_deg_le2(RationalPolynomial()), Error);
}

TEST_CASE("mixed factors are all found") {
  // (2x - 3)(x^2 + 1)(x^2 - 2)(x^3 - 2)(x + 5)^2
  RationalPolynomial p = poly({-3, 2}) * poly({1, 0, 1}) * poly({-2, 0, 1}) * poly({-2, 0, 0, 1}) *
                         poly({5, 1}).pow(2);
  Factorization f = factor_deg_le2(p);
  CHECK(f.expand() == p);
  CHECK(f.roots().size() == 6);
  REQUIRE(f.unresolved().size() == 1);
  CHECK(f.unresolved()[0].first == poly({-2, 0, 0, 1}));
  for (const auto& [r, m] : f.roots()) CHECK(root_of(p, r));
}

TEST_CASE("quadratic factor split into two linears mod p") {
  // x^2 + 1 splits mod 5, 13, ...; x^2 - 7 and x^2 + 3 likewise for many p
  RationalPolynomial p = poly({1, 0, 1}) * poly({-7, 0, 1}) * poly({3, 0, 1}) * poly({1, 1, 0, 1});
  Factorization f = factor_deg_le2(p);
  CHECK(f.expand() == p);
  CHECK(f.roots().size() == 6);
  CHECK(f.unresolved().size() == 1);
}

TEST_CASE("random products re-expand exactly") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<long> c(-12, 12), pick(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    RationalPolynomial p(Rational(c(rng) == 0 ? 3 : 7, 2));
    std::size_t expected_roots = 0;
    for (int k = 0; k < 4; ++k) {
      long lead = std::max(1L, std::abs(c(rng)) % 4);
      switch (pick(rng)) {
        case 0:
          p *= poly({c(rng), lead});
          break;
        case 1:
          p *= poly({c(rng), c(rng), lead});
          break;
        default:
          p *= poly({c(rng) | 1, 0, 0, 2});
          break;
      }
    }
    Factorization f = factor_deg_le2(p);
    CHECK(f.expand() == p);
    std::size_t total_degree = 0;
    for (const auto& piece : f.pieces) {
      total_degree += static_cast<std::size_t>(piece.factor.degree() * piece.multiplicity);
      if (piece.resolved()) {
        CHECK(piece.factor.degree() <= 2);
        for (const auto& r : piece.roots) CHECK(root_of(p, r));
      } else {
        CHECK(piece.factor.degree() >= 3);
      }
      expected_roots += piece.roots.size();
    }
    CHECK(total_degree == static_cast<std::size_t>(p.degree()));
  }
}
