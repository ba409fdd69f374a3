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

#include "tbelyi/funcfield.hpp"

using namespace tbelyi;

namespace {

EllipticCurve curve(long a1, long a2, long a3, long a4, long a6) {
  return EllipticCurve(a1, a2, a3, a4, a6);
}

FieldPolynomial fpoly(std::initializer_list<long> c) {
  std::vector<FieldElement> v;
  for (long k : c) v.emplace_back(k);
  return FieldPolynomial(std::move(v));
}

FieldPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<FieldElement> v;
  for (int k = deg(rng); k >= 0; --k) v.emplace_back(coef(rng));
  return FieldPolynomial(std::move(v));
}

CurveFunction random_function(std::mt19937& rng, const EllipticCurve& E) {
  for (;;) {
    FieldPolynomial u = random_poly(rng, 3), v = random_poly(rng, 2), w = random_poly(rng, 2);
    if (w.is_zero() || (u.is_zero() && v.is_zero())) continue;
    return CurveFunction(E, u, v, w);
  }
}

}  // namespace

TEST_CASE("parse into canonical form") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  CurveFunction f = CurveFunction::parse("(1-y)/2", E);
  CHECK(f.u() == fpoly({1}));
  CHECK(f.v() == fpoly({-1}));
  CHECK(f.w() == fpoly({2}));
  CurveFunction g = CurveFunction::parse("x^2", E);
  CHECK(g.u() == fpoly({0, 0, 1}));
  CHECK(g.v().is_zero());
  CHECK(g.w() == fpoly({1}));
  CurveFunction h = CurveFunction::parse("1/y", E);
  CHECK(h.u().is_zero());
  CHECK(h.v() == fpoly({1}));
  CHECK(h.w() == fpoly({1, 0, 0, 1}));
  CHECK_THROWS_AS(CurveFunction::parse("(1-y", E), Error);
  CHECK_THROWS_AS(CurveFunction::parse("1/(x-x)", E), Error);
  CHECK_THROWS_AS(CurveFunction::parse("z + 1", E), Error);
  try {
    CurveFunction::parse("1/0", E);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("arithmetic keeps the canonical form") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  CurveFunction beta = CurveFunction::parse("(1-y)/2", E);
  CHECK(beta - CurveFunction::constant(E, 1) == CurveFunction::parse("(-1-y)/2", E));
  CHECK((beta * beta.inverse()) == CurveFunction::constant(E, 1));
  EllipticCurve F = curve(0, 0, 0, -1, 0);
  CHECK(CurveFunction::parse("(1-x^2)", F) == CurveFunction::constant(F, 1) - CurveFunction::parse("x^2", F));
  CHECK(CurveFunction::parse("y^2", F) == CurveFunction::parse("x^3 - x", F));
  EllipticCurve G = curve(0, 0, 0, 1, 0);
  CHECK_THROWS_AS(beta + CurveFunction::x(G), Error);
}

TEST_CASE("printing round-trips") {
  std::mt19937 rng(5);
  std::vector<EllipticCurve> curves = {curve(0, 0, 0, 0, 1), curve(1, 1, 1, 22, -9), curve(1, 0, 0, -28, 272)};
  for (const auto& E : curves) {
    for (int k = 0; k < 40; ++k) {
      CurveFunction f = random_function(rng, E);
      CHECK(CurveFunction::parse(f.to_string(), E) == f);
    }
  }
  EllipticCurve E = curve(0, 0, 0, 1, 0);
  CurveFunction phi = CurveFunction::parse("sqrt(2)*x/y", E);
  CHECK(CurveFunction::parse(phi.to_string(), E) == phi);
  CHECK(CurveFunction::parse("(1-y)/2", curves[0]).to_string() == "(1 - y)/2");
}

TEST_CASE("evaluation on the extended line") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  CurveFunction beta = CurveFunction::parse("(1-y)/2", E);
  CHECK(cf_eval(beta, CurvePoint(0, 1)) == ExtendedValue::finite(0));
  CHECK(cf_eval(beta, CurvePoint::infinity()) == ExtendedValue::infinity());
  EllipticCurve F = curve(0, 0, 0, -1, 0);
  CHECK(cf_eval(CurveFunction::parse("x^2", F), CurvePoint::infinity()) == ExtendedValue::infinity());
  // removable singularity: x / y * y at (0, 0) of y^2 = x^3 - x, stored as x
  CurveFunction g = CurveFunction::parse("y^2/x", F);
  CHECK(cf_eval(g, CurvePoint(0, 0)) == ExtendedValue::finite(-1));
  // y/x at O has ord -1: pole
  CHECK(cf_eval(CurveFunction::parse("y/x", F), CurvePoint::infinity()) == ExtendedValue::infinity());
  // x/y at O has ord 1
  CHECK(cf_eval(CurveFunction::parse("x/y", F), CurvePoint::infinity()) == ExtendedValue::finite(0));
  // x^2 / (x^2 + 1) at O tends to 1
  CHECK(cf_eval(CurveFunction::parse("x^2/(x^2+1)", F), CurvePoint::infinity()) == ExtendedValue::finite(1));
  CHECK_THROWS_AS(cf_eval(beta, CurvePoint(1, 1)), Error);
}

TEST_CASE("equality up to a constant") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  CurveFunction f = CurveFunction::parse("(x + y)/(x - 2)", E);
  CHECK(equal_up_to_constant(CurveFunction::parse("3*(x + y)/(x - 2)", E), f) == std::optional<FieldElement>(3));
  CHECK(equal_up_to_constant(f, f) == std::optional<FieldElement>(1));
  CHECK_FALSE(equal_up_to_constant(CurveFunction::parse("(1-y)/2", E), CurveFunction::parse("(y+1)/2", E)));
}

TEST_CASE("degree from fiber sums") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  CHECK(cf_degree(CurveFunction::parse("(1-y)/2", E)) == 3);
  EllipticCurve F = curve(0, 0, 0, -1, 0);
  CHECK(cf_degree(CurveFunction::parse("x^2", F)) == 4);
  CHECK(cf_degree(CurveFunction::parse("x^4", F)) == 8);
  CHECK_THROWS_AS(cf_degree(CurveFunction::constant(F, 5)), Error);
}

TEST_CASE("zero sets with unresolved factors") {
  EllipticCurve E = curve(0, 0, 0, 0, 1);
  // x^3 - 2 has no roots of degree <= 2; each root carries two points
  ZeroSet z = zeros_of(CurveFunction::parse("x^3 - 2", E));
  CHECK(z.points.empty());
  REQUIRE(z.unresolved.size() == 1);
  CHECK(z.unresolved[0].points_per_root == 2);
  CHECK(z.order_sum() == 6);
  CHECK(z.point_count() == 6);
  // y - 3 vanishes at (2, 3) and at x^2 + 2x + 4 = 0 roots
  ZeroSet w = zeros_of(CurveFunction::parse("y - 3", E));
  CHECK(w.order_sum() == 3);
  CHECK(w.points.size() == 3);
}

TEST_CASE("ord is a valuation on random function pairs") {
  std::mt19937 rng(31);
  struct Sample {
    EllipticCurve E;
    std::vector<CurvePoint> points;
  };
  std::vector<Sample> samples = {
      {curve(0, 0, 0, 0, 1), {CurvePoint::infinity(), CurvePoint(0, 1), CurvePoint(-1, 0), CurvePoint(2, 3)}},
      {curve(0, 0, 0, -1, 0), {CurvePoint::infinity(), CurvePoint(0, 0), CurvePoint(1, 0)}},
      {curve(1, 1, 1, 22, -9),
       {CurvePoint::infinity(), CurvePoint(9, -37), CurvePoint(FieldElement::quadratic(-1, 2, -5), FieldElement(3))}},
  };
  int pairs = 0;
  for (const auto& s : samples) {
    for (int k = 0; k < 40; ++k) {
      CurveFunction f = random_function(rng, s.E), g = random_function(rng, s.E);
      const CurvePoint& P = s.points[static_cast<std::size_t>(k) % s.points.size()];
      int of = ord_at(f, P), og = ord_at(g, P);
      CHECK(ord_at(f * g, P) == of + og);
      CHECK(ord_at(f / g, P) == of - og);
      CurveFunction sum = f + g;
      if (!sum.is_zero()) CHECK(ord_at(sum, P) >= std::min(of, og));
      if (of != og && !sum.is_zero()) CHECK(ord_at(sum, P) == std::min(of, og));
      ++pairs;
    }
  }
  CHECK(pairs >= 100);
}
